# ABOUTME: Z-score standardization fitted on a training split
# ABOUTME: Population standard deviation; constant columns scale by 1

from __future__ import annotations

import logging

import numpy as np

from maneuverml.errors import DimensionMismatch, EmptyCorpus

from .models import Dataset, ScalerParams

__all__ = ["apply_scaler", "fit_scaler", "scale_rows"]

logger = logging.getLogger(__name__)


def fit_scaler(train: Dataset) -> ScalerParams:
    """
    Fit per-column means and population standard deviations.

    Only the training split may be passed here; test rows are scaled with the
    parameters this returns.
    """
    if train.n_rows == 0:
        msg = "cannot fit a scaler on an empty dataset"
        raise EmptyCorpus(msg)

    means = train.rows.mean(axis=0)
    std_devs = train.rows.std(axis=0, ddof=0)
    constant = np.ptp(train.rows, axis=0) == 0
    std_devs = np.where(constant | (std_devs == 0), 1.0, std_devs)
    constant_columns = tuple(
        name for name, flag in zip(train.feature_names, constant, strict=True) if flag
    )
    if constant_columns:
        logger.warning(
            "Constant feature column(s) %s: standard deviation replaced by 1",
            ", ".join(constant_columns),
        )
    return ScalerParams(
        means=tuple(means.tolist()),
        std_devs=tuple(std_devs.tolist()),
        constant_columns=constant_columns,
    )


def scale_rows(rows: np.ndarray, params: ScalerParams) -> np.ndarray:
    """Apply ``(x - mean) / std`` column-wise to a raw feature matrix."""
    matrix = np.atleast_2d(np.asarray(rows, dtype=float))
    if matrix.shape[1] != len(params.means):
        msg = f"expected {len(params.means)} features, got {matrix.shape[1]}"
        raise DimensionMismatch(msg)
    return (matrix - np.asarray(params.means)) / np.asarray(params.std_devs)


def apply_scaler(dataset: Dataset, params: ScalerParams) -> Dataset:
    """Standardize every column of a dataset with fitted parameters."""
    return dataset.with_rows(scale_rows(dataset.rows, params))
