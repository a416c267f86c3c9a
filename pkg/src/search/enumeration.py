"""Permutation batches fed to the kernels"""
from itertools import permutations
from typing import Iterable

import numpy as np

from automata.modes import SequentialMode, representative_modes

# Rings up to this size are enumerated in one batch
SINGLE_SHARD_SIZE = 7


def modes_array(modes: Iterable[SequentialMode]) -> np.ndarray:
    """One row per mode holding its update order"""
    rows = [mode.order for mode in modes]
    if not rows:
        return np.empty((0, 0), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def prefix_permutations(n: int, prefix: tuple[int, ...]) -> np.ndarray:
    """Every permutation of 0..n-1 starting with prefix, in lexicographic order"""
    rest = [cell for cell in range(n) if cell not in prefix]
    rows = [prefix + tail for tail in permutations(rest)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def permutation_shards(n: int) -> list[tuple[int, ...]]:
    """Prefixes splitting the n! permutations into lexicographically ordered shards"""
    if n <= SINGLE_SHARD_SIZE:
        return [()]
    return [(first, second) for first in range(n) for second in range(n) if first != second]


def representatives_array(n: int) -> np.ndarray:
    return modes_array(representative_modes(n))
