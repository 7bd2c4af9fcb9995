"""SparseLDA's three-bucket split, every bucket searched linearly.

    p_t = αβ/(n_t + β̄)  +  β·n_td/(n_t + β̄)  +  n_tw·(n_td + α)/(n_t + β̄)
          smoothing          document              word

The word bucket is tried first since it usually carries most of the mass.
"""
from fplus_lda.samplers.lsearch import lsearch_pairs


class SparseLdaSampler:
    def __init__(self, hyper, topic_totals):
        self.alpha = hyper.alpha
        self.beta = hyper.beta
        self.beta_bar = hyper.beta_bar
        self.totals = topic_totals
        ab = self.alpha * self.beta
        self.smoothing = [ab / (n + self.beta_bar) for n in topic_totals]
        self.smoothing_mass = sum(self.smoothing)
        self.doc_weights = {}
        self.doc_mass = 0.0
        self.doc_topics = []
        self.word_entries = []
        self.word_mass = 0.0
        self.total_mass = 0.0

    def enter_doc(self, doc_counts):
        totals, beta, beta_bar = self.totals, self.beta, self.beta_bar
        self.doc_weights = {t: beta * c / (totals[t] + beta_bar) for t, c in doc_counts.items()}
        self.doc_mass = sum(self.doc_weights.values())
        # bound the drift of the incrementally kept smoothing mass
        self.smoothing_mass = sum(self.smoothing)

    def leave_doc(self):
        self.doc_weights = {}
        self.doc_mass = 0.0

    def refresh(self, doc_counts, t):
        """Topic ``t`` just changed its counts; fix both cached buckets."""
        denom = self.totals[t] + self.beta_bar
        smoothing = self.alpha * self.beta / denom
        self.smoothing_mass += smoothing - self.smoothing[t]
        self.smoothing[t] = smoothing

        n_td = doc_counts.get(t)
        old = self.doc_weights.pop(t, 0.0)
        new = self.beta * n_td / denom if n_td else 0.0
        if n_td:
            self.doc_weights[t] = new
        self.doc_mass = self.doc_mass + new - old if self.doc_weights else 0.0

    def prepare(self, doc_counts, word_counts) -> float:
        totals, alpha, beta_bar = self.totals, self.alpha, self.beta_bar
        self.word_entries = [
            (t, c * (doc_counts.get(t) + alpha) / (totals[t] + beta_bar))
            for t, c in word_counts.items()
        ]
        self.word_mass = sum(w for _, w in self.word_entries)
        self.doc_topics = list(doc_counts.topics)
        self.total_mass = self.word_mass + self.doc_mass + self.smoothing_mass
        return self.total_mass

    @property
    def edges(self):
        return [
            0.0,
            self.word_mass,
            self.word_mass + self.doc_mass,
            self.total_mass,
        ]

    def draw(self, u: float) -> int:
        if u < self.word_mass:
            return lsearch_pairs(self.word_entries, u)
        u -= self.word_mass
        if u < self.doc_mass:
            weights = self.doc_weights
            return lsearch_pairs(((t, weights[t]) for t in self.doc_topics), u)
        u -= self.doc_mass
        return lsearch_pairs(enumerate(self.smoothing), u)
