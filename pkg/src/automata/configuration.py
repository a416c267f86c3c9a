"""Ring configurations of an elementary cellular automaton

A configuration of n cells is stored as an n-bit integer where cell i is bit i.
The text form writes cell 0 first, so "01101" has cells 1, 2 and 4 set.
"""
from dataclasses import dataclass

from utilities.constants import MAX_RING_SIZE, MIN_RING_SIZE


class InputError(Exception):
    """Exception raised when an argument violates a domain precondition"""


def check_ring_size(n: int, low: int = MIN_RING_SIZE, high: int = MAX_RING_SIZE,
                    name: str = "n") -> None:
    """Raise InputError unless low <= n <= high"""
    if not low <= n <= high:
        raise InputError(f"{name} must be between {low} and {high}, got {n}")


@dataclass(frozen=True, order=True)
class Configuration:
    """Binary word on a ring of n cells"""
    n: int
    bits: int

    def __post_init__(self):
        check_ring_size(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise InputError(f"bits {self.bits} do not fit a ring of {self.n} cells")

    @classmethod
    def from_cells(cls, cells) -> "Configuration":
        """Build a configuration from a sequence of 0/1 cell states, cell 0 first"""
        cells = list(cells)
        bits = 0
        for i, cell in enumerate(cells):
            if cell not in (0, 1):
                raise InputError(f"cell {i} must be 0 or 1, got {cell!r}")
            bits |= cell << i
        return cls(len(cells), bits)

    @classmethod
    def uniform(cls, n: int, state: int) -> "Configuration":
        """All-zero or all-one configuration"""
        return cls(n, (1 << n) - 1 if state else 0)

    def cell(self, i: int) -> int:
        """State of cell i, index taken modulo n"""
        return (self.bits >> (i % self.n)) & 1

    def cells(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    def with_cell(self, i: int, state: int) -> "Configuration":
        """Copy with cell i set to state"""
        i %= self.n
        return Configuration(self.n, (self.bits & ~(1 << i)) | (state << i))

    def neighborhood(self, i: int) -> int:
        """Neighborhood pattern 4l+2c+r around cell i"""
        return (self.cell(i - 1) << 2) | (self.cell(i) << 1) | self.cell(i + 1)

    def rotate(self, shift: int) -> "Configuration":
        """Shift every cell `shift` places to the right around the ring"""
        shift %= self.n
        mask = (1 << self.n) - 1
        return Configuration(self.n, ((self.bits << shift) | (self.bits >> (self.n - shift))) & mask)

    def complement(self) -> "Configuration":
        return Configuration(self.n, self.bits ^ ((1 << self.n) - 1))

    def reflect(self) -> "Configuration":
        """Mirror image: cell i takes the state of cell n-1-i"""
        return Configuration.from_cells(reversed(self.cells()))

    def contains_word(self, word: str) -> bool:
        """True if word occurs at some position of the ring, wrapping around"""
        if len(word) > self.n:
            raise InputError(f"word {word!r} is longer than the ring size {self.n}")
        text = str(self)
        return word in text + text[:len(word) - 1]

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))


def all_configurations(n: int):
    """Every configuration of a ring of n cells in ascending numeric order"""
    check_ring_size(n)
    return (Configuration(n, bits) for bits in range(1 << n))


@dataclass(frozen=True)
class RunDecomposition:
    """Maximal runs of equal states read cyclically

    `offset` is the cell where the first run starts; the first run is the one
    containing cell 0.
    """
    runs: tuple[tuple[int, int], ...]
    offset: int = 0

    @property
    def n(self) -> int:
        return sum(length for _, length in self.runs)

    def isles(self, state: int) -> list[int]:
        """Lengths of the runs of `state`"""
        return [length for value, length in self.runs if value == state]

    def reconstruct(self) -> Configuration:
        """Rebuild the configuration the runs were read from"""
        cells = []
        for value, length in self.runs:
            cells.extend([value] * length)
        word = Configuration.from_cells(cells)
        return word.rotate(self.offset)


def run_decomposition(x: Configuration) -> RunDecomposition:
    """Split x into cyclic maximal runs starting with the run that holds cell 0"""
    cells = x.cells()
    n = x.n
    if all(cell == cells[0] for cell in cells):
        return RunDecomposition(((cells[0], n),), 0)

    start = 0
    while cells[start - 1] == cells[start]:
        start -= 1
    start %= n

    runs = []
    value, length = cells[start], 0
    for k in range(n):
        cell = cells[(start + k) % n]
        if cell == value:
            length += 1
        else:
            runs.append((value, length))
            value, length = cell, 1
    runs.append((value, length))
    return RunDecomposition(tuple(runs), start)
