"""F+LDA over the word-major token order.

The F+tree holds ``q_t = (n_tw + β)/(n_t + β̄)`` for the current word on top of
the base ``β/(n_t + β̄)``; the sparse part ``r_t = n_td·q_t`` lives on T_d and is
searched by binary search.
"""
from fplus_lda.errors import ConsistencyError
from fplus_lda.models.decomposition import two_level_sample
from fplus_lda.samplers.cumsum import sparse_cdf
from fplus_lda.samplers.ftree import FTree


class WordOrderSampler:
    tree_class = FTree

    def __init__(self, hyper, topic_totals):
        """
        Args:
            hyper: the priors.
            topic_totals: live ``n_t`` list; the serial model's totals or a
                worker's local shadow. It is read, never written.
        """
        self.alpha = hyper.alpha
        self.beta = hyper.beta
        self.beta_bar = hyper.beta_bar
        self.totals = topic_totals
        self.tree = self.tree_class.build(self._base_leaves())
        self.cdf = None
        self.sparse_mass = 0.0
        self.total_mass = 0.0

    def _base_leaves(self):
        beta, beta_bar = self.beta, self.beta_bar
        return [beta / (n + beta_bar) for n in self.totals]

    def rebuild(self):
        """Refresh every leaf from the current totals and resum the tree."""
        self.tree.rebuild(self._base_leaves())

    def enter_word(self, word_counts):
        totals, beta_bar, tree = self.totals, self.beta_bar, self.tree
        for t, c in word_counts.items():
            tree.update(t, c / (totals[t] + beta_bar))

    def leave_word(self, word_counts):
        totals, beta_bar, tree = self.totals, self.beta_bar, self.tree
        for t, c in word_counts.items():
            tree.update(t, -c / (totals[t] + beta_bar))

    def refresh(self, word_counts, t):
        self.tree.set_leaf(
            t, (word_counts.get(t) + self.beta) / (self.totals[t] + self.beta_bar)
        )

    def prepare(self, doc_counts) -> float:
        """Build the sparse CDF of ``r`` for one token; returns the total mass."""
        nodes, cap = self.tree.nodes, self.tree.capacity
        masses = [c * nodes[cap + t] for t, c in doc_counts.items()]
        self.cdf = sparse_cdf(list(doc_counts.topics), masses)
        self.sparse_mass = self.cdf.total
        self.total_mass = self.sparse_mass + self.alpha * self.tree.total
        return self.total_mass

    @property
    def edges(self):
        """Piece boundaries of the draw range: sparse part, then dense part."""
        return [0.0, self.sparse_mass, self.total_mass]

    def draw(self, u: float) -> int:
        return two_level_sample(self.alpha, self.tree, self.cdf, u)


def sample_word_occurrences(
    sampler: WordOrderSampler,
    word_counts,
    doc_topic,
    totals,
    positions,
    token_docs,
    z,
    rng,
) -> int:
    """Resample every listed occurrence of one word.

    Shared by the serial epoch and the nomad workers: ``word_counts`` is the
    word's ``n_tw`` (model row or token payload), ``doc_topic`` maps document to
    ``n_td`` and ``totals`` is ``n_t`` or the worker's shadow.

    Returns:
        the number of occurrences whose topic changed.

    Raises:
        ConsistencyError: a count would drop below zero.
    """
    if not positions:
        return 0
    us = rng.random(len(positions)).tolist()
    sampler.enter_word(word_counts)
    moves = 0
    for pos, u in zip(positions, us):
        doc_counts = doc_topic[token_docs[pos]]
        old = z[pos]
        if totals[old] < 1:
            raise ConsistencyError(f"topic total {old} is already zero")
        doc_counts.decrement(old)
        word_counts.decrement(old)
        totals[old] -= 1
        sampler.refresh(word_counts, old)

        new = sampler.draw(u * sampler.prepare(doc_counts))

        doc_counts.increment(new)
        word_counts.increment(new)
        totals[new] += 1
        sampler.refresh(word_counts, new)
        if new != old:
            z[pos] = new
            moves += 1
    sampler.leave_word(word_counts)
    return moves
