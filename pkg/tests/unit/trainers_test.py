import numpy as np
import pytest

from fplus_lda import constant
from fplus_lda.datasets.corpus import Corpus
from fplus_lda.errors import ConfigError
from fplus_lda.models.count_model import CountModel
from fplus_lda.models.hyper import HyperParams
from fplus_lda.samplers import FTree
from fplus_lda.trainers import TrainerConfig
from fplus_lda.trainers import alias_lda_epoch
from fplus_lda.trainers import flda_doc_epoch
from fplus_lda.trainers import flda_word_epoch
from fplus_lda.trainers import sparse_lda_epoch
from fplus_lda.trainers import SerialTrainer
from fplus_lda.trainers import train
from fplus_lda.trainers import random_streams
from fplus_lda.trainers.alias_lda import AliasLdaSampler
from fplus_lda.trainers.doc_order import DocOrderSampler
from fplus_lda.trainers.sparse_lda import SparseLdaSampler
from fplus_lda.trainers.word_order import WordOrderSampler
from fplus_lda.trainers.word_order import sample_word_occurrences
from tests.unit.common_fixtures_test import interval_masses
from tests.unit.common_fixtures_test import normalized
from tests.unit.common_fixtures_test import small  # noqa: F401
from tests.unit.common_fixtures_test import small_corpus
from tests.unit.common_fixtures_test import small_hyper
from tests.unit.common_fixtures_test import small_state


def _frozen_word_order(model, d, w, old):
    sampler = WordOrderSampler(model.hyper, model.topic_totals)
    sampler.enter_word(model.word_topic[w])
    model.remove_token(d, w, old)
    sampler.refresh(model.word_topic[w], old)
    sampler.prepare(model.doc_topic[d])
    return sampler


def _frozen_doc_order(model, d, w, old):
    sampler = DocOrderSampler(model.hyper, model.topic_totals)
    sampler.enter_doc(model.doc_topic[d])
    model.remove_token(d, w, old)
    sampler.refresh(model.doc_topic[d], old)
    sampler.prepare(model.word_topic[w])
    return sampler


def _frozen_sparse(model, d, w, old):
    sampler = SparseLdaSampler(model.hyper, model.topic_totals)
    sampler.enter_doc(model.doc_topic[d])
    model.remove_token(d, w, old)
    sampler.refresh(model.doc_topic[d], old)
    sampler.prepare(model.doc_topic[d], model.word_topic[w])
    return sampler


@pytest.mark.parametrize("freeze", [_frozen_word_order, _frozen_doc_order, _frozen_sparse])
def test_interval_measure_matches_conditional(freeze):
    for pos in range(12):
        corpus, z, model = small_state(seed=pos)
        d, w = int(corpus.token_docs[pos]), int(corpus.token_words[pos])
        sampler = freeze(model, d, w, z[pos])
        masses = interval_masses(sampler.draw, sampler.edges, model.num_topics)
        expected = normalized(model.conditional_weights(d, w))
        assert normalized(masses) == pytest.approx(expected, rel=1e-9, abs=1e-12)
        assert sampler.edges[-1] == pytest.approx(sum(model.conditional_weights(d, w)), rel=1e-12)


def test_sparse_three_terms_sum_to_conditional(small):
    corpus, z, model = small
    sampler = _frozen_sparse(model, 0, int(corpus.token_words[0]), z[0])
    weights = model.conditional_weights(0, int(corpus.token_words[0]))
    masses = [sampler.word_mass, sampler.doc_mass, sampler.smoothing_mass]
    assert sum(masses) == pytest.approx(float(weights.sum()), rel=1e-12)


def test_sparse_uniform_when_counts_are_empty():
    hyper = HyperParams(num_topics=4, vocab_size=3, alpha=0.5, beta=0.1)
    model = CountModel(1, hyper)
    sampler = SparseLdaSampler(hyper, model.topic_totals)
    sampler.enter_doc(model.doc_topic[0])
    sampler.prepare(model.doc_topic[0], model.word_topic[0])
    assert sampler.word_mass == 0.0
    assert sampler.doc_mass == 0.0
    masses = interval_masses(sampler.draw, sampler.edges, 4)
    assert normalized(masses) == pytest.approx([0.25] * 4)


def test_word_order_leaves_fresh_at_word_boundary(small):
    corpus, z, model = small
    hyper = model.hyper
    sampler = WordOrderSampler(hyper, model.topic_totals)
    rng = random_streams.sampling_generator(0)
    token_docs = corpus.token_docs_list()
    for w, positions in enumerate(corpus.word_major_lists()):
        sample_word_occurrences(sampler, model.word_topic[w], model.doc_topic,
                                model.topic_totals, positions, token_docs, z, rng)
        base = [hyper.beta / (n + hyper.beta_bar) for n in model.topic_totals]
        assert sampler.tree.leaves() == pytest.approx(base, rel=1e-9)


def test_doc_order_leaves_fresh_at_doc_boundary(small):
    corpus, z, model = small
    hyper = model.hyper
    sampler = DocOrderSampler(hyper, model.topic_totals)
    flda_doc_epoch(corpus, z, model, random_streams.sampling_generator(0), sampler)
    base = [hyper.alpha / (n + hyper.beta_bar) for n in model.topic_totals]
    assert sampler.tree.leaves() == pytest.approx(base, rel=1e-9)


@pytest.mark.parametrize(
    "epoch",
    [
        flda_word_epoch,
        flda_doc_epoch,
        sparse_lda_epoch,
        lambda corpus, z, model, rng: alias_lda_epoch(corpus, z, model, rng, 1),
        lambda corpus, z, model, rng: alias_lda_epoch(corpus, z, model, rng, 4),
    ],
)
def test_epochs_conserve_counts(small, epoch):
    corpus, z, model = small
    rng = random_streams.sampling_generator(11)
    for _ in range(5):
        epoch(corpus, z, model, rng)
        recount = CountModel.from_assignments(corpus, z, model.hyper)
        assert recount.same_counts(model)
        model.check_invariants()


@pytest.mark.parametrize("epoch", [flda_word_epoch, flda_doc_epoch, sparse_lda_epoch])
def test_single_token_single_topic(epoch):
    corpus = Corpus.from_documents([[0]], vocab_size=1)
    hyper = HyperParams(num_topics=1, vocab_size=1)
    z = [0]
    model = CountModel.from_assignments(corpus, z, hyper)
    epoch(corpus, z, model, random_streams.sampling_generator(0))
    assert z == [0]


def test_doc_order_sparse_support_is_word_support():
    corpus = Corpus.from_documents([[2, 2, 2]], vocab_size=3)
    hyper = HyperParams(num_topics=4, vocab_size=3, alpha=0.5, beta=0.1)
    z = [1, 3, 3]
    model = CountModel.from_assignments(corpus, z, hyper)
    sampler = _frozen_doc_order(model, 0, 2, z[0])
    assert sampler.cdf.index == model.word_topic[2].topics == [3]


class CountingTree(FTree):
    __slots__ = ("updates", "samples", "rebuilds")

    def __init__(self, size):
        super().__init__(size)
        self.updates = 0
        self.samples = 0
        self.rebuilds = 0

    def update(self, t, delta):
        self.updates += 1
        super().update(t, delta)

    def set_leaf(self, t, value):
        self.updates += 1
        super().set_leaf(t, value)

    def sample(self, u):
        self.samples += 1
        return super().sample(u)

    def rebuild(self, weights=None):
        self.rebuilds += 1
        super().rebuild(weights)


def test_word_order_step_work_is_bounded(monkeypatch, small):
    monkeypatch.setattr(WordOrderSampler, "tree_class", CountingTree)
    corpus, z, model = small
    sampler = WordOrderSampler(model.hyper, model.topic_totals)
    rng = random_streams.sampling_generator(5)
    token_docs = corpus.token_docs_list()
    for w, positions in enumerate(corpus.word_major_lists()):
        tree = sampler.tree
        tree.updates = 0
        tree.samples = 0
        support_before = len(model.word_topic[w])
        sample_word_occurrences(sampler, model.word_topic[w], model.doc_topic,
                                model.topic_totals, positions, token_docs, z, rng)
        n = len(positions)
        # enter + leave over T_w, two leaf-anchored updates per occurrence
        assert tree.updates <= support_before + len(model.word_topic[w]) + 2 * n
        assert tree.samples <= n
        assert tree.rebuilds == 0
        if positions:
            # the sparse part of the last step spans T_d only
            support = len(model.doc_topic[token_docs[positions[-1]]])
            assert support - 1 <= len(sampler.cdf) <= support


def test_alias_acceptance_is_one_when_proposal_is_fresh(small):
    corpus, z, model = small
    sampler = AliasLdaSampler(model.hyper, model.topic_totals, mh_steps=2)
    w = int(corpus.token_words[0])
    doc_counts, word_counts = model.doc_topic[0], model.word_topic[w]
    stale = sampler.stale_proposal(w, word_counts)
    for current in range(4):
        for candidate in range(4):
            ratio = sampler.acceptance(stale, doc_counts, word_counts, current, candidate)
            assert ratio == pytest.approx(1.0)


def test_alias_tables_rebuilt_after_num_topics_draws(small):
    corpus, z, model = small
    sampler = AliasLdaSampler(model.hyper, model.topic_totals, mh_steps=1)
    w = int(corpus.token_words[0])
    rng = np.random.default_rng(0)
    for _ in range(40):
        # u close to 1 always lands in the stale part
        sampler.resample(w, model.doc_topic[0], model.word_topic[w], z[0], [0.999999, rng.random()])
    assert sampler.rebuilds == 40 // model.num_topics


def test_train_records_and_determinism():
    corpus = small_corpus()
    for algorithm in constant.SUPPORTED_ALGORITHMS:
        config = TrainerConfig(algorithm=algorithm, iterations=3, hyper=small_hyper(), seed=9)
        z1, model1, trace1 = train(corpus, config)
        z2, model2, trace2 = train(corpus, config)
        assert len(trace1) == 3
        assert [r.iter for r in trace1] == [1, 2, 3]
        assert z1 == z2
        assert model1.same_counts(model2)
        assert [r.loglik for r in trace1] == [r.loglik for r in trace2]
        assert all(r.workers == 1 and r.seed == 9 and r.algorithm == algorithm for r in trace1)


def test_train_rejects_bad_configs():
    with pytest.raises(ConfigError):
        TrainerConfig(algorithm="flda-word", iterations=0, hyper=small_hyper())
    with pytest.raises(ConfigError):
        TrainerConfig(algorithm="gibbs", iterations=1, hyper=small_hyper())
    config = TrainerConfig(algorithm="flda-word", iterations=1,
                           hyper=HyperParams(num_topics=4, vocab_size=9))
    with pytest.raises(ConfigError):
        train(small_corpus(), config)


def test_empty_vocabulary_is_a_config_error():
    corpus = Corpus.from_documents([], vocab_size=0)
    config = TrainerConfig(algorithm="flda-word", iterations=1,
                           hyper=HyperParams(num_topics=4, vocab_size=0))
    with pytest.raises(ConfigError, match="vocabulary is empty"):
        train(corpus, config)


def test_resume_needs_the_same_hyper_parameters():
    corpus = small_corpus()
    saved = SerialTrainer(corpus, TrainerConfig(algorithm="flda-word", iterations=1, hyper=small_hyper()))
    saved.run()
    for hyper in (
        HyperParams(num_topics=16, vocab_size=5, alpha=0.5, beta=0.1),
        HyperParams(num_topics=4, vocab_size=5, alpha=0.5, beta=0.2),
    ):
        config = TrainerConfig(algorithm="flda-word", iterations=1, hyper=hyper)
        with pytest.raises(ConfigError, match="resume"):
            SerialTrainer(corpus, config, saved.state)



def test_train_reports_each_record():
    seen = []
    config = TrainerConfig(algorithm="sparse", iterations=2, hyper=small_hyper())
    _, _, trace = train(small_corpus(), config, on_record=seen.append)
    assert seen == trace.records
    assert trace.initial_loglik is not None
    assert trace.final_loglik == trace.records[-1].loglik
