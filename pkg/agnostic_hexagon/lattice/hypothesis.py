from functools import reduce
from typing import Iterable, Iterator, List, Sequence, Tuple, Optional

import numpy as np

from agnostic_hexagon.errors import EmptyFamilyError, GridError, GridSizeError
from agnostic_hexagon.lattice.grid import ParameterGrid
from agnostic_hexagon.utils.ops import iter_bits

MAX_EXHAUSTIVE_SIZE = 20


class Hypothesis:
    """A subset of grid indices, stored as a bitmask.

    The σ-field is the full power set of the grid, so every mask below
    2**size is a valid hypothesis, the empty set and the full set included.
    """

    __slots__ = ("mask", "size")

    def __init__(self, mask: int, size: int):
        if size < 1:
            raise GridError(f"Hypotheses live on grids of at least one point, got size {size}.")
        if mask < 0 or mask >> size:
            raise GridError(f"Mask {mask:#x} does not fit a grid of {size} points.")
        self.mask = mask
        self.size = size

    @classmethod
    def empty(cls, size: int) -> "Hypothesis":
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> "Hypothesis":
        return cls((1 << size) - 1, size)

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int) -> "Hypothesis":
        mask = 0
        for index in indices:
            if not 0 <= index < size:
                raise GridError(f"Index {index} is outside a grid of {size} points.")
            mask |= 1 << int(index)
        return cls(mask, size)

    @classmethod
    def from_ids(cls, grid: ParameterGrid, ids: Iterable[str]) -> "Hypothesis":
        return cls.from_indices((grid.index_of(point_id) for point_id in ids), grid.size)

    @classmethod
    def from_bools(cls, flags: Sequence[bool]) -> "Hypothesis":
        return cls.from_indices(np.flatnonzero(np.asarray(flags, dtype=bool)).tolist(), len(flags))

    @classmethod
    def from_predicate(cls, grid: ParameterGrid, predicate: str) -> "Hypothesis":
        from agnostic_hexagon.lattice.expressions import parse_predicate

        condition = parse_predicate(predicate)
        return cls.from_indices(
            (i for i in range(grid.size) if condition.evaluate(grid.coord(i))), grid.size
        )

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.size) - 1

    def ids(self, grid: ParameterGrid) -> List[str]:
        self.check_grid(grid)
        return [grid.ids[i] for i in self.members]

    def check_grid(self, grid: ParameterGrid) -> None:
        if grid.size != self.size:
            raise GridError(
                f"Hypothesis over {self.size} points used on a grid of {grid.size} points."
            )

    def _check_same_size(self, other: "Hypothesis") -> None:
        if other.size != self.size:
            raise GridError(
                f"Hypotheses over {self.size} and {other.size} points cannot be combined."
            )

    def union(self, other: "Hypothesis") -> "Hypothesis":
        self._check_same_size(other)
        return Hypothesis(self.mask | other.mask, self.size)

    def intersection(self, other: "Hypothesis") -> "Hypothesis":
        self._check_same_size(other)
        return Hypothesis(self.mask & other.mask, self.size)

    def complement(self) -> "Hypothesis":
        return Hypothesis(((1 << self.size) - 1) ^ self.mask, self.size)

    def is_subset(self, other: "Hypothesis") -> bool:
        self._check_same_size(other)
        return self.mask & ~other.mask == 0

    def is_disjoint(self, other: "Hypothesis") -> bool:
        self._check_same_size(other)
        return self.mask & other.mask == 0

    __or__ = union
    __and__ = intersection
    __invert__ = complement
    __le__ = is_subset

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.size and bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self):
        return bin(self.mask).count("1")

    def __eq__(self, other):
        if not isinstance(other, Hypothesis):
            return NotImplemented
        return self.mask == other.mask and self.size == other.size

    def __hash__(self):
        return hash((self.mask, self.size))

    def __repr__(self):
        return f"Hypothesis({set(self.members) or '∅'}, size={self.size})"


def complement(grid: ParameterGrid, hypothesis: Hypothesis) -> Hypothesis:
    hypothesis.check_grid(grid)
    return hypothesis.complement()


def family_union(family: Sequence[Hypothesis]) -> Hypothesis:
    if len(family) == 0:
        raise EmptyFamilyError("Cannot take the union of an empty family of hypotheses.")
    return reduce(Hypothesis.union, family)


def family_intersection(family: Sequence[Hypothesis]) -> Hypothesis:
    if len(family) == 0:
        raise EmptyFamilyError("Cannot take the intersection of an empty family of hypotheses.")
    return reduce(Hypothesis.intersection, family)


def nand(first: Hypothesis, second: Hypothesis) -> Hypothesis:
    """H1 ↑ H2 = Θ − (H1 ∩ H2)."""
    return first.intersection(second).complement()


def check_exhaustive_size(size: int, limit: int = MAX_EXHAUSTIVE_SIZE) -> None:
    if size > limit:
        raise GridSizeError(
            f"Exhaustive enumeration is limited to {limit} points, got {size}."
        )


def enumerate_hypotheses(
    grid: ParameterGrid, limit: int = MAX_EXHAUSTIVE_SIZE
) -> Iterator[Hypothesis]:
    """Every subset of the grid, in binary counting order over the indices."""
    size = grid.size
    check_exhaustive_size(size, min(limit, MAX_EXHAUSTIVE_SIZE))
    return (Hypothesis(mask, size) for mask in range(1 << size))


def random_hypothesis(
    size: int, rng: np.random.Generator, cardinality: Optional[int] = None
) -> Hypothesis:
    """Draws a random subset; the cardinality is uniform on 0..size unless given."""
    if cardinality is None:
        cardinality = int(rng.integers(0, size + 1))
    indices = rng.choice(size, size=cardinality, replace=False) if cardinality else []
    return Hypothesis.from_indices((int(i) for i in indices), size)
