import numpy as np
import pytest
from scipy.stats import chisquare

from fplus_lda.datasets import SyntheticSpec
from fplus_lda.datasets import generate_synthetic
from fplus_lda.samplers import AliasSampler
from fplus_lda.samplers import CumsumSampler
from fplus_lda.samplers import FTree
from fplus_lda.samplers import LinearSampler
from fplus_lda.samplers import bsearch_sample
from fplus_lda.samplers import cumsum_build
from fplus_lda.samplers import lsearch_sample
from fplus_lda.trainers.alias_lda import AliasLdaSampler
from tests.end2end.common_fixtures_test import frozen_state
from tests.end2end.common_fixtures_test import total_variation

DRAWS = 1_000_000


@pytest.mark.parametrize("size", [3, 4, 16, 64, 1024])
def test_exact_samplers_return_identical_indices(size):
    rng = np.random.default_rng(1000 + size)
    for _ in range(1000):
        weights = rng.random(size)
        weights[rng.random(size) < 0.2] = 0.0
        weights[rng.integers(size)] += 1.0
        weights = weights.tolist()
        tree = FTree.build(weights)
        cdf = cumsum_build(weights)
        us = rng.random(1000) * min(tree.total, cdf.total)
        # first prefix strictly above u, accumulated left to right as the linear scan does
        expected = np.searchsorted(np.asarray(cdf.values), us, side="right")
        for k, u in enumerate(us.tolist()):
            t = int(expected[k])
            if k < 20:
                assert lsearch_sample(weights, u) == t
            assert bsearch_sample(cdf, u) == t
            assert tree.sample(u) == t


@pytest.mark.parametrize("cls", [LinearSampler, CumsumSampler, AliasSampler, FTree])
def test_empirical_law_matches_weights(cls):
    rng = np.random.default_rng(16)
    weights = (rng.random(16) + 0.05).tolist()
    sampler = cls.build(weights)
    us = (rng.random(DRAWS) * sampler.total).tolist()
    draws = [sampler.sample(u) for u in us]
    counts = np.bincount(draws, minlength=16)
    assert total_variation(counts, weights) < 0.005
    expected = np.asarray(weights) / sum(weights) * DRAWS
    assert chisquare(counts, expected).pvalue > 1e-3


def test_alias_lda_long_chain_matches_conditional():
    model, d, w, current = frozen_state()
    sampler = AliasLdaSampler(model.hyper, model.topic_totals, mh_steps=32)
    rng = np.random.default_rng(32)
    steps = 100_000
    counts = np.zeros(model.num_topics, dtype=np.int64)
    doc_counts, word_counts = model.doc_topic[d], model.word_topic[w]
    for _ in range(steps):
        us = rng.random(2 * sampler.mh_steps).tolist()
        counts[sampler.resample(w, doc_counts, word_counts, current, us)] += 1
    assert total_variation(counts, model.conditional_weights(d, w)) < 0.02


def test_long_documents_follow_planted_mixture():
    spec = SyntheticSpec(
        num_docs=4, vocab_size=50, num_topics=5, mean_doc_length=10_000, alpha=0.5, beta=0.1, seed=7,
    )
    corpus, phi, theta = generate_synthetic(spec)
    for d in range(corpus.num_docs):
        counts = np.bincount(corpus.document(d), minlength=spec.vocab_size)
        assert total_variation(counts, theta[d] @ phi) < 0.05
