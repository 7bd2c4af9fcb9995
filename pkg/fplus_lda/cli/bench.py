"""Sampler micro-benchmarks: build, sample and update cost per T.

Weights follow a shuffled power law to mimic skewed topic counts. Each number
is the median over trials of the mean cost per operation, after a warm-up that
is not timed.
"""
import logging
import time
from dataclasses import asdict
from dataclasses import dataclass
from typing import List

import numpy as np
from prettytable import PrettyTable
from tqdm import tqdm

from fplus_lda import constant
from fplus_lda.samplers import AliasSampler
from fplus_lda.samplers import CumsumSampler
from fplus_lda.samplers import FTree
from fplus_lda.samplers import LinearSampler
from fplus_lda.util.metric import ns_per_op

SAMPLERS = {
    "lsearch": LinearSampler,
    "bsearch": CumsumSampler,
    "alias": AliasSampler,
    "ftree": FTree,
}

BENCH_FIELDS = ["sampler", "topics", "ns_per_sample", "ns_per_update", "ns_per_build"]


@dataclass
class BenchRecord:
    sampler: str
    topics: int
    ns_per_sample: float
    ns_per_update: float
    ns_per_build: float

    def to_dict(self):
        return asdict(self)


def power_law_weights(rng, num_topics, exponent=1.1):
    ranks = np.arange(1, num_topics + 1, dtype=np.float64)
    return rng.permutation(ranks ** -exponent).tolist()


def _time_builds(cls, weights, reps):
    start = time.perf_counter_ns()
    for _ in range(reps):
        cls.build(weights)
    return ns_per_op(time.perf_counter_ns() - start, reps)


def _time_samples(sampler, us):
    total = sampler.total
    draws = [u * total for u in us]
    start = time.perf_counter_ns()
    for u in draws:
        sampler.sample(u)
    return ns_per_op(time.perf_counter_ns() - start, len(draws))


def _time_updates(sampler, topics, delta):
    # +delta then -delta on the same topic keeps every weight positive
    start = time.perf_counter_ns()
    for k, t in enumerate(topics):
        sampler.update(t, delta if k % 2 == 0 else -delta)
    return ns_per_op(time.perf_counter_ns() - start, len(topics))


def bench_sampler(name, num_topics, trials, samples, updates, warmup, rng) -> BenchRecord:
    cls = SAMPLERS[name]
    weights = power_law_weights(rng, num_topics)
    delta = min(weights) / 2
    build_reps = max(1, 4096 // num_topics)

    sampler = cls.build(weights)
    _time_samples(sampler, rng.random(warmup).tolist())
    warm_topics = rng.integers(0, num_topics, size=max(1, warmup // 2)).repeat(2)
    _time_updates(sampler, warm_topics.tolist(), delta)

    per_sample, per_update, per_build = [], [], []
    for _ in range(trials):
        per_build.append(_time_builds(cls, weights, build_reps))
        sampler = cls.build(weights)
        per_sample.append(_time_samples(sampler, rng.random(samples).tolist()))
        topics = rng.integers(0, num_topics, size=max(1, updates // 2)).repeat(2).tolist()
        per_update.append(_time_updates(sampler, topics, delta))
    return BenchRecord(
        sampler=name,
        topics=num_topics,
        ns_per_sample=float(np.median(per_sample)),
        ns_per_update=float(np.median(per_update)),
        ns_per_build=float(np.median(per_build)),
    )


def run_benchmark(
    topics=None,
    updates_per_sample=0.1,
    trials=constant.BENCH_TRIALS,
    samples=constant.BENCH_SAMPLES_PER_TRIAL,
    warmup=constant.BENCH_WARMUP,
    seed=constant.BENCH_SEED,
    samplers=None,
    show_progress=False,
) -> List[BenchRecord]:
    topics = topics or constant.BENCH_TOPICS
    samplers = samplers or list(SAMPLERS)
    updates = max(2, int(round(updates_per_sample * samples)))
    rng = np.random.default_rng(seed)
    cases = [(name, T) for name in samplers for T in topics]
    records = []
    for name, T in tqdm(cases, desc="bench", disable=not show_progress):
        record = bench_sampler(name, T, trials, samples, updates, warmup, rng)
        logging.debug("%s", record)
        records.append(record)
    return records


def summary_table(records: List[BenchRecord]) -> PrettyTable:
    table = PrettyTable(["sampler", "T", "ns/sample", "ns/update", "ns/build"])
    for r in records:
        table.add_row(
            [r.sampler, r.topics, f"{r.ns_per_sample:.0f}", f"{r.ns_per_update:.0f}",
             f"{r.ns_per_build:.0f}"]
        )
    return table


def cmd_bench_samplers(topics, updates_per_sample, trials, writer=None, show_progress=False) -> int:
    """Benchmark every sampler for every T; records go to ``writer`` if given."""
    records = run_benchmark(
        topics=topics,
        updates_per_sample=updates_per_sample,
        trials=trials,
        show_progress=show_progress,
    )
    if writer is not None:
        for record in records:
            writer.write(record)
    logging.info("sampler benchmark:\n%s", summary_table(records))
    return 0
