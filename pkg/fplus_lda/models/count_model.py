from typing import List

import numpy as np

from fplus_lda.errors import ConsistencyError
from fplus_lda.models.hyper import HyperParams
from fplus_lda.models.sparse_counts import SparseCounts


class CountModel:
    """Sufficient statistics of collapsed Gibbs sampling.

    Attributes:
        doc_topic: ``n_td`` per document.
        word_topic: ``n_tw`` per word.
        topic_totals: dense ``n_t``.
        hyper: the priors; ``hyper.vocab_size`` fixes ``beta_bar``.
    """

    def __init__(self, num_docs: int, hyper: HyperParams):
        self.hyper = hyper
        self.doc_topic: List[SparseCounts] = [SparseCounts() for _ in range(num_docs)]
        self.word_topic: List[SparseCounts] = [
            SparseCounts() for _ in range(hyper.vocab_size)
        ]
        self.topic_totals: List[int] = [0] * hyper.num_topics

    @classmethod
    def from_assignments(cls, corpus, z, hyper: HyperParams) -> "CountModel":
        """Tally counts from scratch; the recount oracle of every test."""
        model = cls(corpus.num_docs, hyper)
        for d, w, t in zip(corpus.token_docs_list(), corpus.token_words_list(), z):
            model.add_token(d, w, t)
        return model

    @property
    def num_docs(self):
        return len(self.doc_topic)

    @property
    def num_topics(self):
        return self.hyper.num_topics

    @property
    def vocab_size(self):
        return self.hyper.vocab_size

    @property
    def num_tokens(self):
        return sum(self.topic_totals)

    def add_token(self, d: int, w: int, t: int):
        self.doc_topic[d].increment(t)
        self.word_topic[w].increment(t)
        self.topic_totals[t] += 1

    def remove_token(self, d: int, w: int, t: int):
        """Decrement ``n_td``, ``n_tw`` and ``n_t`` for one token.

        Raises:
            ConsistencyError: one of the three counts is already zero.
        """
        if (
            self.topic_totals[t] < 1
            or self.doc_topic[d].get(t) < 1
            or self.word_topic[w].get(t) < 1
        ):
            raise ConsistencyError(
                f"cannot remove token (doc={d}, word={w}, topic={t}): count is zero",
            )
        self.doc_topic[d].decrement(t)
        self.word_topic[w].decrement(t)
        self.topic_totals[t] -= 1

    def conditional_weights(self, d: int, w: int) -> np.ndarray:
        """Unnormalised ``p_t = (n_td + α)(n_tw + β) / (n_t + β̄)`` for every topic.

        The token being resampled must already be removed.
        """
        hyper = self.hyper
        n_td = np.asarray(self.doc_topic[d].to_dense(hyper.num_topics), dtype=np.float64)
        n_tw = np.asarray(self.word_topic[w].to_dense(hyper.num_topics), dtype=np.float64)
        n_t = np.asarray(self.topic_totals, dtype=np.float64)
        return (n_td + hyper.alpha) * (n_tw + hyper.beta) / (n_t + hyper.beta_bar)

    def doc_lengths(self) -> List[int]:
        return [counts.total() for counts in self.doc_topic]

    def topic_word_distribution(self) -> np.ndarray:
        """φ̂ with shape (T, J)."""
        hyper = self.hyper
        dense = np.zeros((hyper.num_topics, hyper.vocab_size), dtype=np.float64)
        for w, counts in enumerate(self.word_topic):
            for t, c in counts.items():
                dense[t, w] = c
        totals = np.asarray(self.topic_totals, dtype=np.float64)
        return (dense + hyper.beta) / (totals[:, None] + hyper.beta_bar)

    def doc_topic_distribution(self) -> np.ndarray:
        """θ̂ with shape (I, T)."""
        hyper = self.hyper
        dense = np.zeros((self.num_docs, hyper.num_topics), dtype=np.float64)
        for d, counts in enumerate(self.doc_topic):
            for t, c in counts.items():
                dense[d, t] = c
        lengths = dense.sum(axis=1, keepdims=True)
        return (dense + hyper.alpha) / (lengths + hyper.num_topics * hyper.alpha)

    def top_words(self, k: int) -> List[List[int]]:
        phi = self.topic_word_distribution()
        return [list(np.argsort(-row, kind="stable")[:k]) for row in phi]

    def check_invariants(self):
        """Verify the count conservation identities.

        Raises:
            ConsistencyError: a count is negative or the marginals disagree.
        """
        T = self.num_topics
        by_doc = [0] * T
        for counts in self.doc_topic:
            for t, c in counts.items():
                if c < 1:
                    raise ConsistencyError(f"stale support entry ({t}, {c})")
                by_doc[t] += c
        by_word = [0] * T
        for counts in self.word_topic:
            for t, c in counts.items():
                if c < 1:
                    raise ConsistencyError(f"stale support entry ({t}, {c})")
                by_word[t] += c
        if by_doc != self.topic_totals or by_word != self.topic_totals:
            raise ConsistencyError(
                "topic marginals disagree: "
                f"docs={by_doc} words={by_word} totals={self.topic_totals}",
            )

    def same_counts(self, other: "CountModel") -> bool:
        return (
            self.topic_totals == other.topic_totals
            and self.doc_topic == other.doc_topic
            and self.word_topic == other.word_topic
        )

    def copy(self) -> "CountModel":
        clone = CountModel(0, self.hyper)
        clone.doc_topic = [c.copy() for c in self.doc_topic]
        clone.word_topic = [c.copy() for c in self.word_topic]
        clone.topic_totals = list(self.topic_totals)
        return clone
