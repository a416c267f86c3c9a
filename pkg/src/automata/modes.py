"""Update modes: periodic block sequences and sequential permutations"""
import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from automata.configuration import InputError, check_ring_size
from utilities.constants import MAX_CLASS_SEARCH_SIZE


@dataclass(frozen=True)
class UpdateMode:
    """Periodic update mode: block b is updated simultaneously at substep b"""
    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        check_ring_size(self.n)
        if not self.blocks:
            raise InputError("an update mode needs at least one block")
        for index, block in enumerate(self.blocks):
            if not block:
                raise InputError(f"block {index} is empty")
            bad = [cell for cell in block if not 0 <= cell < self.n]
            if bad:
                raise InputError(f"block {index} references cell {min(bad)} outside 0..{self.n - 1}")

    @classmethod
    def from_blocks(cls, n: int, blocks) -> "UpdateMode":
        return cls(n, tuple(frozenset(block) for block in blocks))

    @property
    def period(self) -> int:
        return len(self.blocks)

    @property
    def is_sequential(self) -> bool:
        """True if the blocks are singletons forming a permutation of the cells"""
        if self.period != self.n or any(len(block) != 1 for block in self.blocks):
            return False
        return {next(iter(block)) for block in self.blocks} == set(range(self.n))

    def as_sequential(self) -> "SequentialMode":
        if not self.is_sequential:
            raise InputError(f"{self} is not a sequential update mode")
        return SequentialMode(tuple(next(iter(block)) for block in self.blocks))

    def __str__(self) -> str:
        return ";".join("{" + ",".join(map(str, sorted(block))) + "}" for block in self.blocks)


@dataclass(frozen=True, order=True)
class SequentialMode:
    """Sequential update mode: one cell per substep, in `order`"""
    order: tuple[int, ...]

    def __post_init__(self):
        check_ring_size(len(self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise InputError(f"{self.order} is not a permutation of 0..{len(self.order) - 1}")

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def period(self) -> int:
        return len(self.order)

    @property
    def blocks(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset((cell,)) for cell in self.order)

    @property
    def is_sequential(self) -> bool:
        return True

    def positions(self) -> tuple[int, ...]:
        """positions()[i] is the substep at which cell i is updated"""
        pos = [0] * self.n
        for k, cell in enumerate(self.order):
            pos[cell] = k
        return tuple(pos)

    def as_update_mode(self) -> UpdateMode:
        return UpdateMode(self.n, self.blocks)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.order)) + ")"


Mode = Union[UpdateMode, SequentialMode]


@lru_cache(maxsize=4096)
def mode_arrays(mode: Mode) -> tuple[np.ndarray, np.ndarray]:
    """Blocks of a mode in the cells/offsets layout used by the kernels"""
    cells = []
    offsets = [0]
    for block in mode.blocks:
        cells.extend(sorted(block))
        offsets.append(len(cells))
    cells_array = np.array(cells, dtype=np.int64)
    offsets_array = np.array(offsets, dtype=np.int64)
    cells_array.setflags(write=False)
    offsets_array.setflags(write=False)
    return cells_array, offsets_array


@dataclass(frozen=True, order=True)
class ModeSignature:
    """Orientation of every ring edge: bit i set iff cell i is updated before cell i+1"""
    n: int
    bits: int

    def before(self, i: int) -> bool:
        return bool((self.bits >> (i % self.n)) & 1)

    def __str__(self) -> str:
        return "".join("1" if self.before(i) else "0" for i in range(self.n))


def mode_signature(mode: SequentialMode) -> ModeSignature:
    """Signature of a sequential mode; equal signatures give equal step maps"""
    pos = mode.positions()
    n = mode.n
    bits = 0
    for i in range(n):
        if pos[i] < pos[(i + 1) % n]:
            bits |= 1 << i
    return ModeSignature(n, bits)


def signature_order(signature: ModeSignature) -> SequentialMode:
    """Lexicographically smallest permutation realizing a signature

    Kahn's algorithm over the precedence graph, always releasing the smallest
    available cell.
    """
    n = signature.n
    if signature.bits in (0, (1 << n) - 1):
        raise InputError(f"signature {signature} orients the ring into a cycle")
    successors: list[list[int]] = [[] for _ in range(n)]
    indegree = [0] * n
    for i in range(n):
        j = (i + 1) % n
        first, second = (i, j) if signature.before(i) else (j, i)
        successors[first].append(second)
        indegree[second] += 1

    ready = [cell for cell in range(n) if indegree[cell] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        cell = heapq.heappop(ready)
        order.append(cell)
        for nxt in successors[cell]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                heapq.heappush(ready, nxt)
    return SequentialMode(tuple(order))


def representative_of(mode: SequentialMode) -> SequentialMode:
    """Canonical member of the signature class of mode"""
    return signature_order(mode_signature(mode))


@lru_cache(maxsize=16)
def representative_modes(n: int) -> tuple[SequentialMode, ...]:
    """One sequential mode per realizable signature, in lexicographic order"""
    check_ring_size(n, high=MAX_CLASS_SEARCH_SIZE)
    modes = [signature_order(ModeSignature(n, bits)) for bits in range(1, (1 << n) - 1)]
    return tuple(sorted(modes))


def temporal_compose(first: Mode, second: Mode) -> UpdateMode:
    """Mode that runs first's period and then second's; blocks kept verbatim"""
    if first.n != second.n:
        raise InputError(f"cannot compose modes on {first.n} and {second.n} cells")
    return UpdateMode(first.n, tuple(first.blocks) + tuple(second.blocks))


#region Mode families
def forward_sweep(n: int) -> SequentialMode:
    """(0, 1, ..., n-1)"""
    return SequentialMode(tuple(range(n)))


def reverse_sweep(n: int) -> SequentialMode:
    """(n-1, ..., 1, 0)"""
    return SequentialMode(tuple(range(n - 1, -1, -1)))


def stride_sweep(n: int, stride: int = 3) -> SequentialMode:
    """Cells congruent to 0 mod stride first, then 1 mod stride, and so on"""
    return SequentialMode(tuple(cell for start in range(stride) for cell in range(start, n, stride)))


def parallel_mode(n: int) -> UpdateMode:
    return UpdateMode(n, (frozenset(range(n)),))


def audit_modes(n: int) -> tuple[UpdateMode, ...]:
    """Fixed block-sequential modes checked on top of the sequential ones"""
    even = frozenset(range(0, n, 2))
    odd = frozenset(range(1, n, 2))
    half = n // 2
    pairs = tuple(frozenset(range(start, min(start + 2, n))) for start in range(0, n, 2))
    return (
        parallel_mode(n),
        UpdateMode(n, (even, odd)),
        UpdateMode(n, (odd, even)),
        UpdateMode(n, (frozenset(range(half)), frozenset(range(half, n)))),
        UpdateMode(n, pairs),
    )
#endregion
