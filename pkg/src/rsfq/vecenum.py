"""Vectorized coefficient-block enumeration shared by the numpy-backed scans."""

from __future__ import annotations

import numpy as np


def coeff_digits(count: int, base: int, width: int) -> np.ndarray:
    """(count, width) array whose row i holds the base-`base` digits of i.

    Column 0 is the least significant digit, matching counting order.
    """
    out = np.empty((count, width), dtype=np.int8)
    idx = np.arange(count, dtype=np.int64)
    for j in range(width):
        out[:, j] = (idx % base).astype(np.int8)
        idx //= base
    return out


def rows_to_indices(rows: np.ndarray, base: int) -> np.ndarray:
    """Inverse of coeff_digits: base-`base` value of each row, int64."""
    acc = np.zeros(rows.shape[0], dtype=np.int64)
    mult = 1
    for j in range(rows.shape[1]):
        acc += rows[:, j].astype(np.int64) * mult
        mult *= base
    return acc
