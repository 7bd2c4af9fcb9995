"""Walker's alias method with Vose's linear-time construction."""
from typing import List

from fplus_lda.errors import ContractViolationError
from fplus_lda.errors import InvalidDistributionError
from fplus_lda.samplers.lsearch import check_weights


class AliasTable:
    """Equal-mass buckets; bucket ``j`` keeps outcome ``j`` with probability
    ``prob[j]`` and otherwise yields ``alias[j]``.

    Attributes:
        prob: per-bucket keep probability in ``[0, 1]``.
        alias: per-bucket alias outcome.
        total: total mass of the weights the table was built from.
    """

    __slots__ = ("prob", "alias", "total")

    def __init__(self, prob: List[float], alias: List[int], total: float):
        self.prob = prob
        self.alias = alias
        self.total = total

    def __len__(self):
        return len(self.prob)

    def sample(self, u):
        n = len(self.prob)
        if not 0.0 <= u < n:
            raise ContractViolationError(f"u={u} outside [0, {n})")
        j = int(u)
        if u - j <= self.prob[j]:
            return j
        return self.alias[j]

    def outcome_masses(self):
        """Mass each outcome receives, reconstructed from the buckets."""
        n = len(self.prob)
        bucket = self.total / n
        masses = [0.0] * n
        for j in range(n):
            masses[j] += self.prob[j] * bucket
            masses[self.alias[j]] += (1.0 - self.prob[j]) * bucket
        return masses


def alias_build(weights) -> AliasTable:
    """Build an :class:`AliasTable` with the small/large worklist scheme.

    Raises:
        InvalidDistributionError: a weight is negative or the total is not positive.
    """
    weights = [float(w) for w in weights]
    total = check_weights(weights)
    if total <= 0.0:
        raise InvalidDistributionError("total mass must be positive")
    n = len(weights)
    scaled = [w * n / total for w in weights]

    small = [j for j, w in enumerate(scaled) if w < 1.0]
    large = [j for j, w in enumerate(scaled) if w >= 1.0]

    prob = [0.0] * n
    alias = list(range(n))
    while small and large:
        lo = small.pop()
        hi = large.pop()

        prob[lo] = scaled[lo]
        alias[lo] = hi

        scaled[hi] -= 1.0 - scaled[lo]
        if scaled[hi] < 1.0:
            small.append(hi)
        else:
            large.append(hi)

    # leftovers are full buckets up to rounding
    for j in large:
        prob[j] = 1.0
    for j in small:
        prob[j] = 1.0

    return AliasTable(prob, alias, total)


def alias_sample(table: AliasTable, u: float) -> int:
    return table.sample(u)


class AliasSampler:
    """Alias method behind the common build/sample/update surface.

    ``sample`` takes ``u`` in ``[0, total)`` like the other samplers and maps it
    onto the bucket range; ``update`` rebuilds the table in Θ(T).
    """

    def __init__(self, weights):
        self.weights = [float(w) for w in weights]
        self.table = alias_build(self.weights)

    @classmethod
    def build(cls, weights):
        return cls(weights)

    @property
    def total(self):
        return self.table.total

    def sample(self, u):
        if not 0.0 <= u < self.table.total:
            raise ContractViolationError(f"u={u} outside [0, {self.table.total})")
        n = len(self.table)
        v = u / self.table.total * n
        if v >= n:
            v = n - 1.0
        return self.table.sample(v)

    def update(self, t, delta):
        self.weights[t] += delta
        self.table = alias_build(self.weights)
