from bisect import bisect_right
from itertools import accumulate
from typing import List
from typing import Optional

from fplus_lda.errors import ContractViolationError
from fplus_lda.errors import InvalidDistributionError


class Cdf:
    """Inclusive prefix sums, optionally over a sparse support.

    Attributes:
        values: non-decreasing prefix sums; ``values[-1]`` is the total mass.
        index: topic of each slot when built over ``(topic, weight)`` pairs,
            ``None`` for a dense build.
    """

    __slots__ = ("values", "index")

    def __init__(self, values: List[float], index: Optional[List[int]] = None):
        self.values = values
        self.index = index

    @property
    def total(self):
        return self.values[-1] if self.values else 0.0

    def __len__(self):
        return len(self.values)

    def sample(self, u):
        values = self.values
        if not values or not 0.0 <= u < values[-1]:
            raise ContractViolationError(f"u={u} outside [0, {self.total})")
        slot = bisect_right(values, u)
        if slot == len(values):
            slot -= 1
        if self.index is not None:
            return self.index[slot]
        return slot


def cumsum_build(weights) -> Cdf:
    """Build a :class:`Cdf` from dense weights or sparse ``(topic, weight)`` pairs.

    Raises:
        InvalidDistributionError: a weight is negative.
    """
    weights = list(weights)
    if weights and isinstance(weights[0], tuple):
        index = [t for t, _ in weights]
        masses = [float(w) for _, w in weights]
    else:
        index = None
        masses = [float(w) for w in weights]
    for w in masses:
        if w < 0.0:
            raise InvalidDistributionError(f"negative weight {w}")
    return Cdf(list(accumulate(masses)), index)


def sparse_cdf(topics, masses) -> Cdf:
    """Unchecked sparse build used inside the sampling loops."""
    return Cdf(list(accumulate(masses)), topics)


def bsearch_sample(cdf: Cdf, u: float) -> int:
    return cdf.sample(u)


class CumsumSampler:
    """BSearch; an update rebuilds the prefix sums in Θ(T)."""

    def __init__(self, weights):
        self.weights = [float(w) for w in weights]
        self.cdf = cumsum_build(self.weights)

    @classmethod
    def build(cls, weights):
        return cls(weights)

    @property
    def total(self):
        return self.cdf.total

    def sample(self, u):
        return self.cdf.sample(u)

    def update(self, t, delta):
        self.weights[t] += delta
        self.cdf = cumsum_build(self.weights)
