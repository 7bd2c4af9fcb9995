"""F+LDA over the document-major token order.

The F+tree holds ``q_t = (n_td + α)/(n_t + β̄)`` for the current document on top
of the base ``α/(n_t + β̄)``; ``r_t = n_tw·q_t`` lives on T_w.
"""
from fplus_lda.models.decomposition import two_level_sample
from fplus_lda.samplers.cumsum import sparse_cdf
from fplus_lda.samplers.ftree import FTree


class DocOrderSampler:
    tree_class = FTree

    def __init__(self, hyper, topic_totals):
        self.alpha = hyper.alpha
        self.beta = hyper.beta
        self.beta_bar = hyper.beta_bar
        self.totals = topic_totals
        self.tree = self.tree_class.build(self._base_leaves())
        self.cdf = None
        self.sparse_mass = 0.0
        self.total_mass = 0.0

    def _base_leaves(self):
        alpha, beta_bar = self.alpha, self.beta_bar
        return [alpha / (n + beta_bar) for n in self.totals]

    def rebuild(self):
        self.tree.rebuild(self._base_leaves())

    def enter_doc(self, doc_counts):
        totals, beta_bar, tree = self.totals, self.beta_bar, self.tree
        for t, c in doc_counts.items():
            tree.update(t, c / (totals[t] + beta_bar))

    def leave_doc(self, doc_counts):
        totals, beta_bar, tree = self.totals, self.beta_bar, self.tree
        for t, c in doc_counts.items():
            tree.update(t, -c / (totals[t] + beta_bar))

    def refresh(self, doc_counts, t):
        self.tree.set_leaf(
            t, (doc_counts.get(t) + self.alpha) / (self.totals[t] + self.beta_bar)
        )

    def prepare(self, word_counts) -> float:
        nodes, cap = self.tree.nodes, self.tree.capacity
        masses = [c * nodes[cap + t] for t, c in word_counts.items()]
        self.cdf = sparse_cdf(list(word_counts.topics), masses)
        self.sparse_mass = self.cdf.total
        self.total_mass = self.sparse_mass + self.beta * self.tree.total
        return self.total_mass

    @property
    def edges(self):
        return [0.0, self.sparse_mass, self.total_mass]

    def draw(self, u: float) -> int:
        return two_level_sample(self.beta, self.tree, self.cdf, u)
