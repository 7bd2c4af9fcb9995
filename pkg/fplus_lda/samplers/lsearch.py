from typing import Sequence

from fplus_lda.errors import ContractViolationError
from fplus_lda.errors import InvalidDistributionError


def check_weights(weights):
    total = 0.0
    for w in weights:
        if w < 0.0:
            raise InvalidDistributionError(f"negative weight {w}")
        total += w
    return total


def lsearch_sample(weights: Sequence[float], u: float) -> int:
    """Return ``min{t: w_0 + ... + w_t > u}`` by a linear scan.

    Args:
        weights: unnormalised non-negative weights.
        u: a draw in ``[0, sum(weights))``.

    Raises:
        InvalidDistributionError: a weight is negative or the total is not positive.
        ContractViolationError: ``u`` is outside ``[0, total)``.
    """
    total = check_weights(weights)
    if total <= 0.0:
        raise InvalidDistributionError("total mass must be positive")
    if not 0.0 <= u < total:
        raise ContractViolationError(f"u={u} outside [0, {total})")
    return _scan(weights, u)


def _scan(weights, u):
    acc = 0.0
    last = -1
    for t, w in enumerate(weights):
        if w <= 0.0:
            continue
        acc += w
        last = t
        if acc > u:
            return t
    # rounding left u at the very top of the range
    return last


def lsearch_pairs(pairs, u):
    """Linear search over ``(topic, weight)`` pairs without range checks.

    Used by trainers whose bucket masses are maintained incrementally, so the
    accumulated sum may fall an ulp short of ``u``; the last positive entry wins.
    """
    acc = 0.0
    last = -1
    for t, w in pairs:
        if w <= 0.0:
            continue
        acc += w
        last = t
        if acc > u:
            return t
    return last


class LinearSampler:
    """LSearch with a Θ(1) update of the normalisation constant."""

    def __init__(self, weights):
        self.weights = [float(w) for w in weights]
        self.total = check_weights(self.weights)

    @classmethod
    def build(cls, weights):
        return cls(weights)

    def sample(self, u):
        if not 0.0 <= u < self.total:
            raise ContractViolationError(f"u={u} outside [0, {self.total})")
        return _scan(self.weights, u)

    def update(self, t, delta):
        self.weights[t] += delta
        self.total += delta
