"""AliasLDA: Metropolis-Hastings over a partly stale alias proposal.

The proposal mixes a per-word alias table over ``α(n_tw + β)/(n_t + β̄)``,
rebuilt only after T draws from it, with a fresh sparse part
``n_td(n_tw + β)/(n_t + β̄)`` on T_d.
"""
from fplus_lda.samplers.alias import alias_build
from fplus_lda.samplers.cumsum import sparse_cdf


class _StaleProposal:
    __slots__ = ("table", "weights", "remaining")

    def __init__(self, table, weights, remaining):
        self.table = table
        self.weights = weights
        self.remaining = remaining


class AliasLdaSampler:
    def __init__(self, hyper, topic_totals, mh_steps):
        self.alpha = hyper.alpha
        self.beta = hyper.beta
        self.beta_bar = hyper.beta_bar
        self.num_topics = hyper.num_topics
        self.totals = topic_totals
        self.mh_steps = mh_steps
        self.stale = {}
        self.rebuilds = 0

    def stale_proposal(self, w, word_counts) -> _StaleProposal:
        entry = self.stale.get(w)
        if entry is None or entry.remaining <= 0:
            alpha, beta, beta_bar = self.alpha, self.beta, self.beta_bar
            dense = word_counts.to_dense(self.num_topics)
            weights = [
                alpha * (n_tw + beta) / (n_t + beta_bar)
                for n_tw, n_t in zip(dense, self.totals)
            ]
            entry = _StaleProposal(alias_build(weights), weights, self.num_topics)
            self.stale[w] = entry
            self.rebuilds += 1
        return entry

    def target(self, doc_counts, word_counts, t) -> float:
        return (
            (doc_counts.get(t) + self.alpha)
            * (word_counts.get(t) + self.beta)
            / (self.totals[t] + self.beta_bar)
        )

    def proposal(self, stale, doc_counts, word_counts, t) -> float:
        fresh = (
            doc_counts.get(t)
            * (word_counts.get(t) + self.beta)
            / (self.totals[t] + self.beta_bar)
        )
        return stale.weights[t] + fresh

    def acceptance(self, stale, doc_counts, word_counts, current, candidate) -> float:
        ratio = (
            self.target(doc_counts, word_counts, candidate)
            * self.proposal(stale, doc_counts, word_counts, current)
        ) / (
            self.target(doc_counts, word_counts, current)
            * self.proposal(stale, doc_counts, word_counts, candidate)
        )
        return min(1.0, ratio)

    def resample(self, w, doc_counts, word_counts, current, us) -> int:
        """Run ``mh_steps`` MH steps from ``current``; ``us`` holds two uniforms
        per step (proposal draw, acceptance test)."""
        stale = self.stale_proposal(w, word_counts)
        beta, beta_bar, totals = self.beta, self.beta_bar, self.totals
        fresh = sparse_cdf(
            list(doc_counts.topics),
            [
                c * (word_counts.get(t) + beta) / (totals[t] + beta_bar)
                for t, c in doc_counts.items()
            ],
        )
        fresh_mass = fresh.total
        stale_mass = stale.table.total
        n = len(stale.table)
        t = current
        for k in range(self.mh_steps):
            u = us[2 * k] * (fresh_mass + stale_mass)
            if u < fresh_mass:
                candidate = fresh.sample(u)
            else:
                v = (u - fresh_mass) / stale_mass * n
                candidate = stale.table.sample(min(v, n - 1e-9))
                stale.remaining -= 1
            if candidate == t:
                continue
            if us[2 * k + 1] < self.acceptance(stale, doc_counts, word_counts, t, candidate):
                t = candidate
        return t
