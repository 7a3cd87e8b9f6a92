# ABOUTME: Dataset package: assembly, splitting, standardization and CSV persistence
# ABOUTME: Interchange boundary between feature extraction and the classifiers

from .builder import build_dataset
from .io import DATASET_HEADER, parse_csv, read_csv, serialize_csv, write_csv
from .models import Dataset, ScalerParams, SplitSpec
from .scaling import apply_scaler, fit_scaler, scale_rows
from .split import split, split_indices, test_size

__all__ = [
    "DATASET_HEADER",
    "Dataset",
    "ScalerParams",
    "SplitSpec",
    "apply_scaler",
    "build_dataset",
    "fit_scaler",
    "parse_csv",
    "read_csv",
    "scale_rows",
    "serialize_csv",
    "split",
    "split_indices",
    "test_size",
]
