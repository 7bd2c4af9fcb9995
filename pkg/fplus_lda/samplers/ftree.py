"""F+tree: a complete binary tree of partial sums stored heap-style in an array.

``nodes[1]`` is the root, node ``i`` has children ``2i`` and ``2i + 1``, and the
leaf of topic ``t`` (0-based) sits at ``capacity + t``. ``capacity`` is the
number of topics rounded up to a power of two; the padding leaves hold 0 and
can never be sampled.
"""
import logging
from typing import List

from fplus_lda import constant
from fplus_lda.errors import ContractViolationError
from fplus_lda.errors import InvalidDistributionError


def _capacity(size):
    return 1 << (size - 1).bit_length()


class FTree:
    __slots__ = ("size", "capacity", "nodes")

    def __init__(self, size: int):
        if size < 1:
            raise ContractViolationError(f"F+tree needs at least one leaf, got {size}")
        self.size = size
        self.capacity = _capacity(size)
        self.nodes: List[float] = [0.0] * (2 * self.capacity)

    @classmethod
    def build(cls, weights) -> "FTree":
        """Build in Θ(T) by filling the leaves and summing upwards.

        Raises:
            InvalidDistributionError: a weight is negative.
        """
        weights = [float(w) for w in weights]
        tree = cls(len(weights))
        for w in weights:
            if w < 0.0:
                raise InvalidDistributionError(f"negative weight {w}")
        cap = tree.capacity
        tree.nodes[cap:cap + len(weights)] = weights
        tree._sum_up()
        return tree

    def _sum_up(self):
        nodes = self.nodes
        for i in range(self.capacity - 1, 0, -1):
            nodes[i] = nodes[2 * i] + nodes[2 * i + 1]

    def rebuild(self, weights=None):
        """Recompute every internal node, optionally from new leaf values."""
        cap = self.capacity
        if weights is not None:
            self.nodes[cap:cap + self.size] = [float(w) for w in weights]
        self._sum_up()

    @property
    def total(self) -> float:
        return self.nodes[1]

    def leaf(self, t: int) -> float:
        return self.nodes[self.capacity + t]

    def leaves(self) -> List[float]:
        return self.nodes[self.capacity:self.capacity + self.size]

    def sample(self, u: float) -> int:
        """Return ``min{t: p_0 + ... + p_t > u}`` by a root-to-leaf descent.

        Raises:
            ContractViolationError: ``u`` is outside ``[0, total)``.
        """
        nodes = self.nodes
        if not 0.0 <= u < nodes[1]:
            raise ContractViolationError(f"u={u} outside [0, {nodes[1]})")
        cap = self.capacity
        i = 1
        while i < cap:
            left = i << 1
            if u >= nodes[left] and nodes[left + 1] > 0.0:
                u -= nodes[left]
                i = left + 1
            else:
                i = left
        return i - cap

    def update(self, t: int, delta: float):
        """Add ``delta`` to leaf ``t`` and recompute its ancestors.

        A leaf that cancellation leaves slightly negative is clamped to 0.

        Raises:
            ContractViolationError: ``t`` is out of range or the leaf would go
                clearly negative.
        """
        self._check_topic(t)
        self._store(t, self.nodes[self.capacity + t] + delta)

    def set_leaf(self, t: int, value: float):
        """Leaf-anchored update: move leaf ``t`` to ``value`` exactly."""
        self._check_topic(t)
        self._store(t, float(value))

    def _check_topic(self, t):
        if not 0 <= t < self.size:
            raise ContractViolationError(f"topic {t} outside [0, {self.size})")

    def _store(self, t, value):
        nodes = self.nodes
        if value < 0.0:
            if value < -constant.LEAF_NEGATIVE_TOLERANCE * nodes[1]:
                raise ContractViolationError(f"leaf {t} would become {value}")
            logging.warning("F+tree leaf %d clamped from %r to 0", t, value)
            value = 0.0
        i = self.capacity + t
        nodes[i] = value
        i >>= 1
        # sums of children, so a node is 0 exactly when its whole subtree is
        while i >= 1:
            nodes[i] = nodes[2 * i] + nodes[2 * i + 1]
            i >>= 1


def ftree_build(weights) -> FTree:
    return FTree.build(weights)


def ftree_sample(tree: FTree, u: float) -> int:
    return tree.sample(u)


def ftree_update(tree: FTree, t: int, delta: float):
    tree.update(t, delta)


def ftree_total(tree: FTree) -> float:
    return tree.total
