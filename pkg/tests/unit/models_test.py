import numpy as np
import pytest

from fplus_lda.errors import ConfigError
from fplus_lda.errors import ConsistencyError
from fplus_lda.errors import ContractViolationError
from fplus_lda.models import CountModel
from fplus_lda.models import HyperParams
from fplus_lda.models import Order
from fplus_lda.models import SparseCounts
from fplus_lda.models import decompose
from fplus_lda.models import joint_log_likelihood
from fplus_lda.models import two_level_sample
from fplus_lda.models.likelihood import dense_log_likelihood
from fplus_lda.models.likelihood import topic_recovery
from fplus_lda.samplers import FTree
from fplus_lda.samplers import cumsum_build
from tests.unit.common_fixtures_test import small  # noqa: F401
from tests.unit.common_fixtures_test import small_corpus
from tests.unit.common_fixtures_test import small_hyper


def test_default_alpha_is_fifty_over_topics():
    hyper = HyperParams(num_topics=1024, vocab_size=10)
    assert hyper.alpha == pytest.approx(0.0488281, abs=1e-7)
    assert hyper.beta == 0.01
    assert hyper.beta_bar == pytest.approx(0.1)


def test_hyper_params_validated():
    with pytest.raises(ConfigError):
        HyperParams(num_topics=0, vocab_size=10)
    with pytest.raises(ConfigError):
        HyperParams(num_topics=4, vocab_size=10, alpha=-1.0)


def test_sparse_counts_support_tracks_counts():
    counts = SparseCounts()
    counts.increment(3)
    counts.increment(1)
    counts.increment(3)
    assert counts.topics == [1, 3]
    assert counts.get(3) == 2
    assert counts.get(2) == 0
    counts.decrement(1)
    assert counts.topics == [3]
    assert counts.to_dense(4) == [0, 0, 0, 2]
    with pytest.raises(ConsistencyError):
        counts.decrement(0)


def test_from_assignments_matches_recount(small):
    corpus, z, model = small
    model.check_invariants()
    assert model.num_tokens == corpus.num_tokens
    dense = np.zeros(4, dtype=int)
    np.add.at(dense, z, 1)
    assert model.topic_totals == dense.tolist()


def test_remove_from_zero_count_raises():
    hyper = small_hyper()
    model = CountModel(3, hyper)
    with pytest.raises(ConsistencyError):
        model.remove_token(0, 0, 0)


def test_remove_then_add_restores_counts(small):
    corpus, z, model = small
    before = model.copy()
    d, w, t = 0, corpus.token_words[0], z[0]
    model.remove_token(d, w, t)
    assert not model.same_counts(before)
    model.add_token(d, w, t)
    assert model.same_counts(before)


def test_conditional_weights_formula():
    corpus = small_corpus()
    hyper = small_hyper()
    model = CountModel(corpus.num_docs, hyper)
    model.add_token(0, 1, 2)
    model.add_token(0, 1, 2)
    model.add_token(1, 1, 0)
    weights = model.conditional_weights(0, 1)
    n_t = np.array([1, 0, 2, 0], dtype=float)
    n_td = np.array([0, 0, 2, 0], dtype=float)
    n_tw = np.array([1, 0, 2, 0], dtype=float)
    expected = (n_td + 0.5) * (n_tw + 0.1) / (n_t + 0.5)
    np.testing.assert_allclose(weights, expected, rtol=1e-12)


@pytest.mark.parametrize("order", [Order.DOC, Order.WORD])
def test_decompose_sums_to_conditional(small, order):
    corpus, z, model = small
    for pos in range(corpus.num_tokens):
        d, w = int(corpus.token_docs[pos]), int(corpus.token_words[pos])
        coef, q, r = decompose(model, d, w, order)
        combined = coef * q
        for t, mass in r.items():
            combined[t] += mass
        np.testing.assert_allclose(combined, model.conditional_weights(d, w), rtol=1e-12)
        support = model.doc_topic[d] if order is Order.WORD else model.word_topic[w]
        assert sorted(r) == support.topics


def test_two_level_sample_branches():
    tree = FTree.build([1.0, 1.0])
    cdf = cumsum_build([(1, 0.5)])
    # sparse part covers [0, 0.5), dense part [0.5, 0.5 + 2 * 2)
    assert two_level_sample(2.0, tree, cdf, 0.25) == 1
    assert two_level_sample(2.0, tree, cdf, 0.5) == 0
    assert two_level_sample(2.0, tree, cdf, 2.4) == 0
    assert two_level_sample(2.0, tree, cdf, 2.6) == 1
    with pytest.raises(ContractViolationError):
        two_level_sample(2.0, tree, cdf, 4.5)


def test_two_level_sample_empty_sparse_part():
    tree = FTree.build([1.0, 3.0])
    cdf = cumsum_build([])
    assert two_level_sample(1.0, tree, cdf, 0.5) == 0
    assert two_level_sample(1.0, tree, cdf, 1.5) == 1


def test_likelihood_sparse_equals_dense(small):
    corpus, z, model = small
    hyper = model.hyper
    n_td = np.zeros((corpus.num_docs, hyper.num_topics))
    n_tw = np.zeros((hyper.vocab_size, hyper.num_topics))
    for d, w, t in zip(corpus.token_docs, corpus.token_words, z):
        n_td[d, t] += 1
        n_tw[w, t] += 1
    expected = dense_log_likelihood(n_td, n_tw, hyper.alpha, hyper.beta)
    assert joint_log_likelihood(model) == pytest.approx(expected, rel=1e-12)


def test_likelihood_of_empty_model_is_zero():
    model = CountModel(0, HyperParams(num_topics=3, vocab_size=0))
    assert joint_log_likelihood(model) == 0.0


def test_distributions_are_normalised(small):
    _, _, model = small
    phi = model.topic_word_distribution()
    theta = model.doc_topic_distribution()
    assert phi.shape == (4, 5)
    assert theta.shape == (3, 4)
    np.testing.assert_allclose(phi.sum(axis=1), 1.0)
    np.testing.assert_allclose(theta.sum(axis=1), 1.0)
    assert all(len(words) == 2 for words in model.top_words(2))


def test_topic_recovery_permutation():
    phi = np.array([[0.7, 0.2, 0.1], [0.1, 0.1, 0.8]])
    mean, pairs = topic_recovery(phi, phi[::-1])
    assert mean == pytest.approx(1.0)
    assert sorted((i, j) for i, j, _ in pairs) == [(0, 1), (1, 0)]
