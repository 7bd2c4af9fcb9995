from bisect import bisect_left
from typing import Iterator
from typing import List
from typing import Tuple

from fplus_lda.errors import ConsistencyError


class SparseCounts:
    """Topic counts kept as parallel lists sorted by topic.

    Only topics with a positive count are stored, so ``topics`` is exactly the
    support (T_d for a document, T_w for a word).
    """

    __slots__ = ("topics", "counts")

    def __init__(self, topics=None, counts=None):
        self.topics: List[int] = list(topics) if topics is not None else []
        self.counts: List[int] = list(counts) if counts is not None else []

    @classmethod
    def from_dense(cls, dense):
        topics = [t for t, c in enumerate(dense) if c]
        return cls(topics, [int(dense[t]) for t in topics])

    def __len__(self):
        return len(self.topics)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return zip(self.topics, self.counts)

    def __eq__(self, other):
        if not isinstance(other, SparseCounts):
            return NotImplemented
        return self.topics == other.topics and self.counts == other.counts

    def __repr__(self):
        return f"SparseCounts({dict(zip(self.topics, self.counts))})"

    def items(self):
        return zip(self.topics, self.counts)

    def get(self, t: int) -> int:
        topics = self.topics
        i = bisect_left(topics, t)
        if i < len(topics) and topics[i] == t:
            return self.counts[i]
        return 0

    def total(self) -> int:
        return sum(self.counts)

    def increment(self, t: int):
        topics = self.topics
        i = bisect_left(topics, t)
        if i < len(topics) and topics[i] == t:
            self.counts[i] += 1
        else:
            topics.insert(i, t)
            self.counts.insert(i, 1)

    def decrement(self, t: int):
        """Remove one count of ``t``; the topic leaves the support at zero.

        Raises:
            ConsistencyError: ``t`` has no count to remove.
        """
        topics = self.topics
        i = bisect_left(topics, t)
        if i == len(topics) or topics[i] != t:
            raise ConsistencyError(f"topic {t} has no count to remove")
        if self.counts[i] == 1:
            del topics[i]
            del self.counts[i]
        else:
            self.counts[i] -= 1

    def to_dense(self, num_topics) -> List[int]:
        dense = [0] * num_topics
        for t, c in zip(self.topics, self.counts):
            dense[t] = c
        return dense

    def copy(self):
        return SparseCounts(self.topics, self.counts)
