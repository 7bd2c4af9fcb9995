"""Sets up the workers, runs epochs and takes quiescent snapshots."""
import concurrent.futures
import logging
import queue
import threading
from typing import List
from typing import Optional

from tqdm import tqdm

from fplus_lda import constant
from fplus_lda.errors import ConfigError
from fplus_lda.errors import ConsistencyError
from fplus_lda.errors import ContractViolationError
from fplus_lda.models import validation
from fplus_lda.models.count_model import CountModel
from fplus_lda.models.likelihood import joint_log_likelihood
from fplus_lda.nomad.partition import partition_corpus
from fplus_lda.nomad.router import Router
from fplus_lda.nomad.tokens import SumToken
from fplus_lda.nomad.tokens import WordToken
from fplus_lda.nomad.transport import InProcessTransport
from fplus_lda.nomad.transport import Transport
from fplus_lda.nomad.worker import Worker
from fplus_lda.nomad.worker import worker_loop
from fplus_lda.trainers import random_streams
from fplus_lda.trainers.config import TrainerConfig
from fplus_lda.trainers.serial import init_assignments
from fplus_lda.trainers.trace import TraceRecord
from fplus_lda.trainers.trace import TrainTrace
from fplus_lda.util.metric import cost_time
from fplus_lda.util.metric import current_ts
from fplus_lda.util.metric import tokens_per_second

# seconds between liveness checks while waiting for parked tokens
_POLL_INTERVAL = 0.05


def census(word_tokens, sum_tokens, num_words):
    """Check that every word token and exactly one sum token are accounted for.

    Raises:
        ConsistencyError: a token is missing or duplicated.
    """
    if len(sum_tokens) != 1:
        raise ConsistencyError(f"expected one sum token, found {len(sum_tokens)}")
    words = sorted(token.word for token in word_tokens)
    if words != list(range(num_words)):
        raise ConsistencyError(
            f"expected {num_words} distinct word tokens, found {len(words)}",
        )


def check_conservation(workers, word_tokens, sum_token):
    """At quiescence the true totals equal ``s + Σ_l (s_l − s̄_l)``.

    Raises:
        ConsistencyError: the identity is broken.
    """
    T = len(sum_token.totals)
    true_totals = [0] * T
    for token in word_tokens:
        for t, c in token.counts.items():
            true_totals[t] += c
    expected = list(sum_token.totals)
    for worker in workers:
        for t, delta in enumerate(worker.unpublished()):
            expected[t] += delta
    if expected != true_totals:
        raise ConsistencyError(
            f"conservation broken: s + unpublished={expected}, recount={true_totals}",
        )


def circulate(workers, sum_token: SumToken) -> SumToken:
    """Two passes of the sum token over stopped workers: the first collects
    every worker's effort, the second hands the exact totals to everyone."""
    for _ in range(2):
        for worker in workers:
            sum_token = worker.merge_sum_token(sum_token)
    return sum_token


def snapshot_counts(workers, word_tokens, sum_token, hyper, num_docs, transport) -> CountModel:
    """Assemble a global :class:`CountModel` from a quiescent system.

    Raises:
        ContractViolationError: a worker is still running or a token is in flight.
        ConsistencyError: the assembled counts break an invariant.
    """
    if any(worker.running for worker in workers) or transport.pending():
        raise ContractViolationError("snapshot requires a quiescent system")
    model = CountModel(num_docs, hyper)
    for worker in workers:
        for d, counts in worker.doc_topic.items():
            model.doc_topic[d] = counts.copy()
    for token in word_tokens:
        model.word_topic[token.word] = token.counts.copy()
    model.topic_totals = list(sum_token.totals)
    model.check_invariants()
    return model


class NomadController:
    """Owns setup, the stop signal and the quiescent snapshots of one run.

    ``transport`` replaces the default in-process queues; it must serve ``p`` workers.
    """

    def __init__(self, corpus, config: TrainerConfig, p: int, routing: str = constant.ROUTING_RING,
                 wire: bool = False, transport: Optional[Transport] = None):
        validation.validate_workers(p)
        if config.algorithm != constant.ALGORITHM_FLDA_WORD:
            raise ConfigError(
                f"nomad workers run {constant.ALGORITHM_FLDA_WORD}, not {config.algorithm}",
            )
        hyper = config.hyper
        validation.validate_corpus_fit(hyper, corpus)
        self.corpus = corpus
        self.config = config
        self.p = p
        self.routing = routing
        self.transport = transport if transport is not None else InProcessTransport(p, wire=wire)
        self.epoch = 0

        self.z = init_assignments(corpus, hyper, config.seed)
        initial = CountModel.from_assignments(corpus, self.z, hyper)
        self.initial_loglik = joint_log_likelihood(initial)

        partitions = partition_corpus(corpus, p)
        owner = [0] * corpus.num_docs
        for l, docs in enumerate(partitions):
            for d in docs:
                owner[d] = l
        token_docs = corpus.token_docs_list()
        local_positions = [dict() for _ in range(p)]
        for w, positions in enumerate(corpus.word_major_lists()):
            for pos in positions:
                local_positions[owner[token_docs[pos]]].setdefault(w, []).append(pos)

        rngs = random_streams.sampling_generators(config.seed, p)
        self.workers: List[Worker] = [
            Worker(
                worker_id=l,
                num_workers=p,
                doc_topic={d: initial.doc_topic[d] for d in partitions[l]},
                positions=local_positions[l],
                token_docs=token_docs,
                z=self.z,
                totals=initial.topic_totals,
                hyper=hyper,
                rng=rngs[l],
            )
            for l in range(p)
        ]
        if routing == constant.ROUTING_UNIFORM:
            routers = [Router(routing, p, rng) for rng in random_streams.routing_generators(config.seed, p)]
        else:
            routers = [Router(routing, p) for _ in range(p)]
        self.routers = routers

        self.sum_token = SumToken(list(initial.topic_totals))
        self.word_tokens = [WordToken(w, initial.word_topic[w]) for w in range(corpus.vocab_size)]
        # initial deal: round-robin by descending frequency
        frequencies = corpus.word_frequencies().tolist()
        by_frequency = sorted(range(corpus.vocab_size), key=lambda w: -frequencies[w])
        self.placement = [(self.word_tokens[w], i % p) for i, w in enumerate(by_frequency)]
        self.model = self.snapshot()

    def snapshot(self) -> CountModel:
        return snapshot_counts(
            self.workers, self.word_tokens, self.sum_token, self.config.hyper,
            self.corpus.num_docs, self.transport,
        )

    def _deal(self):
        self.transport.send(0, self.sum_token)
        per_worker = [[] for _ in range(self.p)]
        for token, dest in self.placement:
            per_worker[dest].append(token)
        for l, tokens in enumerate(per_worker):
            for token in sorted(tokens, key=lambda tok: tok.word):
                self.transport.send(l, token)

    def _wait_parked(self, parked, futures):
        placement = []
        while len(placement) < len(self.word_tokens):
            try:
                placement.append(parked.get(timeout=_POLL_INTERVAL))
            except queue.Empty:
                for future in futures:
                    if future.done():
                        # raises the worker's exception, if any
                        future.result()
                        raise ConsistencyError("a worker exited before its epoch ended")
        return placement

    def run_epoch(self, pool) -> TraceRecord:
        start = current_ts()
        self._deal()
        stop = threading.Event()
        parked = queue.Queue()
        futures = [
            pool.submit(worker_loop, worker, router, self.transport, stop, parked)
            for worker, router in zip(self.workers, self.routers)
        ]
        try:
            placement = self._wait_parked(parked, futures)
        finally:
            stop.set()
            done, _ = concurrent.futures.wait(futures)
        for future in done:
            future.result()

        in_flight = []
        for l in range(self.p):
            in_flight.extend(self.transport.drain(l))
        sum_tokens = [token for token in in_flight if isinstance(token, SumToken)]
        stray = [token for token in in_flight if isinstance(token, WordToken)]
        census([token for token, _ in placement] + stray, sum_tokens, len(self.word_tokens))
        if stray:
            raise ConsistencyError(f"{len(stray)} word tokens were not parked")

        self.sum_token = sum_tokens[0]
        # tokens from the wire are fresh objects; keep the word-id order
        self.word_tokens = sorted((token for token, _ in placement), key=lambda tok: tok.word)
        self.placement = placement
        check_conservation(self.workers, self.word_tokens, self.sum_token)
        self.sum_token = circulate(self.workers, self.sum_token)
        self.model = self.snapshot()
        seconds = cost_time(start)

        self.epoch += 1
        loglik = joint_log_likelihood(self.model)
        record = TraceRecord(
            iter=self.epoch,
            loglik=loglik,
            seconds=seconds,
            tokens_per_sec=tokens_per_second(self.corpus.num_tokens, seconds),
            algorithm=self.config.algorithm,
            workers=self.p,
            seed=self.config.seed,
        )
        logging.info(
            "nomad p=%d epoch %d: loglik=%.6f, %.3fs, %.0f tokens/s",
            self.p, self.epoch, loglik, seconds, record.tokens_per_sec,
        )
        return record

    def run(self, epochs: int, on_record=None) -> TrainTrace:
        validation.validate_epochs(epochs)
        trace = TrainTrace([], initial_loglik=self.initial_loglik)
        logging.info(
            "nomad training on %s with %d workers, %s routing, T=%d",
            self.corpus, self.p, self.routing, self.config.hyper.num_topics,
        )
        with concurrent.futures.ThreadPoolExecutor(
            max_workers=self.p, thread_name_prefix="nomad-worker",
        ) as pool:
            for _ in tqdm(range(epochs), desc=f"nomad p={self.p}",
                          disable=not self.config.show_progress):
                record = self.run_epoch(pool)
                trace.append(record)
                if on_record is not None:
                    on_record(record)
        return trace

    def close(self):
        self.transport.close()


def run_parallel(corpus, config: TrainerConfig, p: int, epochs: int,
                 routing: str = constant.ROUTING_RING, on_record=None, wire: bool = False):
    """Train F+LDA with ``p`` nomad workers for ``epochs`` epochs.

    Returns:
        ``(z, model, trace)``; with ``p == 1`` and ring routing this matches the
        serial word-order trainer bitwise.
    """
    validation.validate_epochs(epochs)
    controller = NomadController(corpus, config, p, routing, wire=wire)
    try:
        trace = controller.run(epochs, on_record)
    finally:
        controller.close()
    return controller.z, controller.model, trace
