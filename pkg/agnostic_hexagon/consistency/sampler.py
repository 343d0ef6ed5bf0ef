import logging
from enum import Enum
from typing import Iterator, Tuple

import numpy as np

from agnostic_hexagon.lattice.hypothesis import Hypothesis, random_hypothesis
from agnostic_hexagon.utils.ops import iter_submasks

logger = logging.getLogger(__name__)

EXHAUSTIVE_SINGLE_LIMIT = 12
EXHAUSTIVE_PAIR_LIMIT = 8
DEFAULT_TRIALS = 20000


class CheckMode(Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"

    def __str__(self):
        return self.value


def choose_mode(size: int, limit: int) -> CheckMode:
    return CheckMode.EXHAUSTIVE if size <= limit else CheckMode.SAMPLED


class HypothesisSampler:
    """Seeded source of hypotheses used above the exhaustive limits.

    Every stream starts with a fixed structured part (singletons,
    co-singletons and the prefix unions of singletons) before drawing
    random subsets, so partition-type failures are always reached.
    """

    def __init__(self, size: int, seed: int = 0, trials: int = DEFAULT_TRIALS):
        self.size = size
        self.seed = seed
        self.trials = trials

    def _rng(self, stream: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, stream])

    def _structured(self) -> Iterator[Hypothesis]:
        n = self.size
        for i in range(n):
            yield Hypothesis(1 << i, n)
        for i in range(n):
            yield Hypothesis(((1 << n) - 1) ^ (1 << i), n)
        yield Hypothesis.empty(n)
        yield Hypothesis.full(n)

    def hypotheses(self) -> Iterator[Hypothesis]:
        yield from self._structured()
        rng = self._rng(0)
        for _ in range(self.trials):
            yield random_hypothesis(self.size, rng)

    def pairs(self) -> Iterator[Tuple[Hypothesis, Hypothesis]]:
        n = self.size
        full = (1 << n) - 1
        prefix = 0
        for i in range(n):
            singleton = Hypothesis(1 << i, n)
            if prefix:
                yield Hypothesis(prefix, n), singleton
                # complements of the prefix and of the singleton, for intersections
                yield Hypothesis(full ^ prefix, n), Hypothesis(full ^ (1 << i), n)
            prefix |= 1 << i
        rng = self._rng(1)
        for _ in range(self.trials):
            yield random_hypothesis(n, rng), random_hypothesis(n, rng)

    def nested_pairs(self) -> Iterator[Tuple[Hypothesis, Hypothesis]]:
        n = self.size
        full = (1 << n) - 1
        for i in range(n):
            yield Hypothesis(1 << i, n), Hypothesis.full(n)
            yield Hypothesis.empty(n), Hypothesis(1 << i, n)
        rng = self._rng(2)
        for _ in range(self.trials):
            smaller = random_hypothesis(n, rng)
            extra = random_hypothesis(n, rng).mask & (full ^ smaller.mask)
            yield smaller, Hypothesis(smaller.mask | extra, n)


def exhaustive_hypotheses(size: int) -> Iterator[Hypothesis]:
    return (Hypothesis(mask, size) for mask in range(1 << size))


def exhaustive_nested_pairs(size: int) -> Iterator[Tuple[Hypothesis, Hypothesis]]:
    """Every pair H ⊆ H′, supersets enumerated through submasks of the complement."""
    full = (1 << size) - 1
    for mask in range(1 << size):
        for extra in iter_submasks(full ^ mask):
            yield Hypothesis(mask, size), Hypothesis(mask | extra, size)
