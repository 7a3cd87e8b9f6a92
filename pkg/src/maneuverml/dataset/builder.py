# ABOUTME: Assembles feature records into an immutable Dataset
# ABOUTME: Row order follows input order, columns follow FEATURE_NAMES

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np

from maneuverml.errors import EmptyCorpus
from maneuverml.features.models import FEATURE_NAMES

from .models import Dataset

if TYPE_CHECKING:
    from collections.abc import Sequence

    from maneuverml.features.models import FeatureRecord

__all__ = ["build_dataset"]

logger = logging.getLogger(__name__)


def build_dataset(records: Sequence[FeatureRecord]) -> Dataset:
    """
    Stack feature records into a dataset.

    Raises:
        EmptyCorpus: If no records are given
        NonFiniteFeature: Naming the first record and column holding NaN or inf
    """
    if not records:
        msg = "no feature records to build a dataset from"
        raise EmptyCorpus(msg)

    rows = np.array([record.as_row() for record in records], dtype=float)
    dataset = Dataset(
        feature_names=FEATURE_NAMES,
        rows=rows,
        labels=np.array([record.maneuver for record in records], dtype=np.int64),
        ids=tuple(record.vehicle_id for record in records),
    )
    negatives, positives = dataset.class_counts()
    logger.info(
        "Built dataset with %d rows (%d maneuver, %d level)",
        dataset.n_rows,
        positives,
        negatives,
    )
    return dataset
