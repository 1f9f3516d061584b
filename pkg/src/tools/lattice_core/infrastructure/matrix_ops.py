"""Exact integer matrix helpers on numpy object arrays.

Every array produced here has ``dtype=object`` and holds Python ints, so
products never overflow. Zero-sized shapes are handled explicitly because
an empty object-dtype product does not reliably yield integer zeros.
"""
from typing import Sequence, Tuple

import numpy as np


def object_array(rows: Sequence[Sequence[int]], n_rows: int, n_cols: int) -> np.ndarray:
    """Build an ``n_rows x n_cols`` object array from nested rows."""
    if n_rows == 0 or n_cols == 0:
        return np.zeros((n_rows, n_cols), dtype=object)
    array = np.empty((n_rows, n_cols), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            array[i, j] = int(value)
    return array


def zeros(n_rows: int, n_cols: int) -> np.ndarray:
    array = np.empty((n_rows, n_cols), dtype=object)
    array.fill(0)
    return array


def identity(n: int) -> np.ndarray:
    array = zeros(n, n)
    for i in range(n):
        array[i, i] = 1
    return array


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of two object arrays."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Cannot multiply {a.shape} by {b.shape}")
    if 0 in a.shape or 0 in b.shape:
        return zeros(a.shape[0], b.shape[1])
    return a.dot(b)


def congruence(t: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Return ᵗT·G·T."""
    return matmul(matmul(t.T, g), t)


def block_diagonal(*blocks: np.ndarray) -> np.ndarray:
    """Block-diagonal object array; blocks need not be square."""
    n_rows = sum(b.shape[0] for b in blocks)
    n_cols = sum(b.shape[1] for b in blocks)
    result = zeros(n_rows, n_cols)
    r = c = 0
    for block in blocks:
        h, w = block.shape
        if h and w:
            result[r:r + h, c:c + w] = block
        r += h
        c += w
    return result


def to_rows(array: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    """Convert a 2-d array back to a tuple of tuples of Python ints."""
    return tuple(tuple(int(x) for x in row) for row in array.tolist())


def is_zero(array: np.ndarray) -> bool:
    return all(x == 0 for x in array.flat)
