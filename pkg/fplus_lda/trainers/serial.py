"""Single-threaded training: one epoch function per algorithm and the loop
that drives them."""
import logging
from dataclasses import dataclass
from typing import Callable
from typing import List
from typing import Optional

from tqdm import tqdm

from fplus_lda import constant
from fplus_lda.errors import ConfigError
from fplus_lda.models import validation
from fplus_lda.models.count_model import CountModel
from fplus_lda.models.hyper import HyperParams
from fplus_lda.models.likelihood import joint_log_likelihood
from fplus_lda.trainers import random_streams
from fplus_lda.trainers.alias_lda import AliasLdaSampler
from fplus_lda.trainers.config import TrainerConfig
from fplus_lda.trainers.doc_order import DocOrderSampler
from fplus_lda.trainers.sparse_lda import SparseLdaSampler
from fplus_lda.trainers.trace import TraceRecord
from fplus_lda.trainers.trace import TrainTrace
from fplus_lda.trainers.word_order import sample_word_occurrences
from fplus_lda.trainers.word_order import WordOrderSampler
from fplus_lda.util.metric import cost_time
from fplus_lda.util.metric import current_ts
from fplus_lda.util.metric import tokens_per_second


def init_assignments(corpus, hyper: HyperParams, seed: int) -> List[int]:
    """Uniform random initial topic for every token, from the seed's init stream."""
    rng = random_streams.init_generator(seed)
    return rng.integers(0, hyper.num_topics, size=corpus.num_tokens).tolist()


def flda_word_epoch(corpus, z, model: CountModel, rng, sampler=None):
    if sampler is None:
        sampler = WordOrderSampler(model.hyper, model.topic_totals)
    else:
        sampler.rebuild()
    token_docs = corpus.token_docs_list()
    for w, positions in enumerate(corpus.word_major_lists()):
        sample_word_occurrences(
            sampler,
            model.word_topic[w],
            model.doc_topic,
            model.topic_totals,
            positions,
            token_docs,
            z,
            rng,
        )


def flda_doc_epoch(corpus, z, model: CountModel, rng, sampler=None):
    if sampler is None:
        sampler = DocOrderSampler(model.hyper, model.topic_totals)
    else:
        sampler.rebuild()
    token_words = corpus.token_words_list()
    for d, positions in enumerate(corpus.doc_major_lists()):
        if not positions:
            continue
        doc_counts = model.doc_topic[d]
        us = rng.random(len(positions)).tolist()
        sampler.enter_doc(doc_counts)
        for pos, u in zip(positions, us):
            w = token_words[pos]
            old = z[pos]
            model.remove_token(d, w, old)
            sampler.refresh(doc_counts, old)

            new = sampler.draw(u * sampler.prepare(model.word_topic[w]))

            model.add_token(d, w, new)
            sampler.refresh(doc_counts, new)
            z[pos] = new
        sampler.leave_doc(doc_counts)


def sparse_lda_epoch(corpus, z, model: CountModel, rng, sampler=None):
    if sampler is None:
        sampler = SparseLdaSampler(model.hyper, model.topic_totals)
    token_words = corpus.token_words_list()
    for d, positions in enumerate(corpus.doc_major_lists()):
        if not positions:
            continue
        doc_counts = model.doc_topic[d]
        us = rng.random(len(positions)).tolist()
        sampler.enter_doc(doc_counts)
        for pos, u in zip(positions, us):
            w = token_words[pos]
            word_counts = model.word_topic[w]
            old = z[pos]
            model.remove_token(d, w, old)
            sampler.refresh(doc_counts, old)

            new = sampler.draw(u * sampler.prepare(doc_counts, word_counts))

            model.add_token(d, w, new)
            sampler.refresh(doc_counts, new)
            z[pos] = new
        sampler.leave_doc()


def alias_lda_epoch(corpus, z, model: CountModel, rng, mh_steps: int, sampler=None):
    """Approximate sweep: ``mh_steps`` MH steps per token against stale tables.

    Passing the same ``sampler`` to consecutive epochs keeps its per-word
    tables alive across the epoch boundary.
    """
    if sampler is None:
        sampler = AliasLdaSampler(model.hyper, model.topic_totals, mh_steps)
    token_words = corpus.token_words_list()
    per_token = 2 * mh_steps
    for d, positions in enumerate(corpus.doc_major_lists()):
        if not positions:
            continue
        doc_counts = model.doc_topic[d]
        us = rng.random(per_token * len(positions)).tolist()
        for k, pos in enumerate(positions):
            w = token_words[pos]
            word_counts = model.word_topic[w]
            old = z[pos]
            model.remove_token(d, w, old)
            new = sampler.resample(
                w, doc_counts, word_counts, old, us[k * per_token:(k + 1) * per_token],
            )
            model.add_token(d, w, new)
            z[pos] = new


@dataclass
class TrainState:
    """Everything needed to continue a serial run bitwise.

    Attributes:
        z: topic of every token, document-major.
        model: counts consistent with ``z``.
        rng_state: bit generator state of the sampling stream.
        iteration: number of completed iterations.
    """

    z: List[int]
    model: CountModel
    rng_state: dict
    iteration: int = 0


class SerialTrainer:
    def __init__(self, corpus, config: TrainerConfig, resume: Optional[TrainState] = None):
        hyper = config.hyper
        validation.validate_corpus_fit(hyper, corpus)
        self.corpus = corpus
        self.config = config
        if resume is None:
            self.z = init_assignments(corpus, hyper, config.seed)
            self.model = CountModel.from_assignments(corpus, self.z, hyper)
            self.rng = random_streams.sampling_generator(config.seed)
            self.iteration = 0
        else:
            validation.validate_resume_state(
                hyper, resume.model.hyper, len(resume.z), corpus.num_tokens,
            )
            if not CountModel.from_assignments(corpus, resume.z, hyper).same_counts(resume.model):
                raise ConfigError("resume state does not match the corpus")
            self.z = resume.z
            self.model = resume.model
            self.rng = random_streams.restore_generator(resume.rng_state)
            self.iteration = resume.iteration
        self._epoch = self._epoch_function()

    def _epoch_function(self) -> Callable[[], None]:
        corpus, z, model, rng = self.corpus, self.z, self.model, self.rng
        algorithm = self.config.algorithm
        if algorithm == constant.ALGORITHM_FLDA_WORD:
            sampler = WordOrderSampler(model.hyper, model.topic_totals)
            return lambda: flda_word_epoch(corpus, z, model, rng, sampler)
        if algorithm == constant.ALGORITHM_FLDA_DOC:
            sampler = DocOrderSampler(model.hyper, model.topic_totals)
            return lambda: flda_doc_epoch(corpus, z, model, rng, sampler)
        if algorithm == constant.ALGORITHM_SPARSE:
            sampler = SparseLdaSampler(model.hyper, model.topic_totals)
            return lambda: sparse_lda_epoch(corpus, z, model, rng, sampler)
        if algorithm == constant.ALGORITHM_ALIAS:
            mh_steps = self.config.mh_steps
            sampler = AliasLdaSampler(model.hyper, model.topic_totals, mh_steps)
            return lambda: alias_lda_epoch(corpus, z, model, rng, mh_steps, sampler)
        raise ConfigError(f"unknown algorithm {algorithm}")

    @property
    def state(self) -> TrainState:
        return TrainState(
            z=self.z,
            model=self.model,
            rng_state=random_streams.generator_state(self.rng),
            iteration=self.iteration,
        )

    def step(self) -> TraceRecord:
        """Run one epoch and evaluate the likelihood."""
        start = current_ts()
        self._epoch()
        seconds = cost_time(start)
        self.iteration += 1
        loglik = joint_log_likelihood(self.model)
        record = TraceRecord(
            iter=self.iteration,
            loglik=loglik,
            seconds=seconds,
            tokens_per_sec=tokens_per_second(self.corpus.num_tokens, seconds),
            algorithm=self.config.algorithm,
            workers=1,
            seed=self.config.seed,
        )
        logging.info(
            "%s iter %d: loglik=%.6f, %.3fs, %.0f tokens/s",
            record.algorithm, record.iter, loglik, seconds, record.tokens_per_sec,
        )
        return record

    def run(self, on_record: Optional[Callable[[TraceRecord], None]] = None) -> TrainTrace:
        trace = TrainTrace([], initial_loglik=joint_log_likelihood(self.model))
        logging.info(
            "training %s on %s, T=%d, initial loglik=%.6f",
            self.config.algorithm, self.corpus, self.config.hyper.num_topics,
            trace.initial_loglik,
        )
        for _ in tqdm(
            range(self.config.iterations),
            desc=self.config.algorithm,
            disable=not self.config.show_progress,
        ):
            record = self.step()
            trace.append(record)
            if on_record is not None:
                on_record(record)
        return trace


def train(corpus, config: TrainerConfig, resume: Optional[TrainState] = None, on_record=None):
    """Run ``config.iterations`` epochs of ``config.algorithm``.

    Returns:
        ``(z, model, trace)``; deterministic given the corpus and config.

    Raises:
        ConfigError: the corpus and config disagree.
        ConsistencyError: a count went negative during sampling.
    """
    trainer = SerialTrainer(corpus, config, resume)
    trace = trainer.run(on_record)
    return trainer.z, trainer.model, trace
