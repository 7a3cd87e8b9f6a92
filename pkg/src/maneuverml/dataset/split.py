# ABOUTME: Deterministic, optionally stratified train/test partitioning
# ABOUTME: Same dataset and SplitSpec always produce the same two sides

from __future__ import annotations

import logging
import math

import numpy as np

from maneuverml.errors import DegenerateSplit

from .models import Dataset, SplitSpec

__all__ = ["split", "split_indices", "test_size"]

logger = logging.getLogger(__name__)


def test_size(n_rows: int, test_fraction: float) -> int:
    """Number of test rows: ``test_fraction * n`` rounded half up."""
    return math.floor(test_fraction * n_rows + 0.5)


def _stratum_quotas(counts: list[int], n_test: int) -> list[int]:
    # Largest remainder apportionment; equal remainders favour the lower class.
    n_rows = sum(counts)
    exact = [count * n_test / n_rows for count in counts]
    quotas = [math.floor(value) for value in exact]
    order = sorted(range(len(counts)), key=lambda c: (-(exact[c] - quotas[c]), c))
    for cls in order[: n_test - sum(quotas)]:
        quotas[cls] += 1
    return quotas


def split_indices(labels: np.ndarray, spec: SplitSpec) -> tuple[np.ndarray, np.ndarray]:
    """
    Compute sorted train and test row indices.

    Raises:
        DegenerateSplit: If either side would be empty, a class is missing
            in stratified mode, or every row of a class lands on the test side
    """
    n_rows = len(labels)
    if n_rows < 2:
        msg = f"cannot split {n_rows} row(s); at least 2 are required"
        raise DegenerateSplit(msg)

    n_test = test_size(n_rows, spec.test_fraction)
    if n_test in (0, n_rows):
        msg = (
            f"test_fraction {spec.test_fraction} on {n_rows} rows leaves "
            f"an empty {'test' if n_test == 0 else 'train'} side"
        )
        raise DegenerateSplit(msg)

    rng = np.random.default_rng(spec.seed)
    if spec.stratified:
        strata = [np.flatnonzero(labels == cls) for cls in (0, 1)]
        missing = [cls for cls, members in enumerate(strata) if len(members) == 0]
        if missing:
            msg = f"stratified split needs both classes, class {missing[0]} is absent"
            raise DegenerateSplit(msg)
        quotas = _stratum_quotas([len(members) for members in strata], n_test)
        test_parts = [
            rng.permutation(members)[:quota]
            for members, quota in zip(strata, quotas, strict=True)
        ]
        test = np.concatenate(test_parts)
    else:
        test = rng.permutation(n_rows)[:n_test]

    mask = np.zeros(n_rows, dtype=bool)
    mask[test] = True
    train = np.flatnonzero(~mask)
    emptied = sorted(set(labels.tolist()) - set(labels[train].tolist()))
    if emptied:
        msg = (
            f"test_fraction {spec.test_fraction} on {n_rows} rows moves every "
            f"row of class {emptied[0]} to the test side"
        )
        raise DegenerateSplit(msg)
    return train, np.flatnonzero(mask)


def split(dataset: Dataset, spec: SplitSpec) -> tuple[Dataset, Dataset]:
    """
    Partition a dataset into disjoint train and test sides.

    Both sides keep the original relative row order.

    Args:
        dataset: Rows to partition
        spec: Test fraction, seed and stratification

    Returns:
        ``(train, test)``
    """
    train_index, test_index = split_indices(dataset.labels, spec)
    logger.debug(
        "Split %d rows into %d train and %d test (seed=%d, stratified=%s)",
        dataset.n_rows,
        len(train_index),
        len(test_index),
        spec.seed,
        spec.stratified,
    )
    return dataset.subset(train_index), dataset.subset(test_index)
