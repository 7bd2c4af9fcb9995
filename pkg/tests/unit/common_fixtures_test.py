import pytest

from fplus_lda.datasets.corpus import Corpus
from fplus_lda.models.count_model import CountModel
from fplus_lda.models.hyper import HyperParams
from fplus_lda.trainers.serial import init_assignments

SMALL_DOCS = [[0, 1, 1, 2], [2, 3, 4], [0, 4, 4, 1, 3]]


def small_corpus():
    return Corpus.from_documents(SMALL_DOCS, vocab_size=5)


def small_hyper():
    return HyperParams(num_topics=4, vocab_size=5, alpha=0.5, beta=0.1)


def small_state(seed=3):
    corpus = small_corpus()
    hyper = small_hyper()
    z = init_assignments(corpus, hyper, seed)
    return corpus, z, CountModel.from_assignments(corpus, z, hyper)


@pytest.fixture()
def small():
    return small_state()


def _first_above(draw, lo, hi, t):
    """Smallest float ``u`` in ``[lo, hi)`` with ``draw(u) > t``; ``hi`` if none."""
    if draw(lo) > t:
        return lo
    for _ in range(200):
        mid = lo + (hi - lo) / 2
        if mid <= lo or mid >= hi:
            break
        if draw(mid) > t:
            hi = mid
        else:
            lo = mid
    return hi


def interval_masses(draw, edges, num_topics):
    """Length of the ``u`` range mapped to each topic.

    ``draw`` must be non-decreasing in ``u`` inside every ``[edges[i], edges[i+1])``.
    """
    masses = [0.0] * num_topics
    for lo, hi in zip(edges, edges[1:]):
        if hi <= lo:
            continue
        prev = lo
        for t in range(num_topics):
            bound = _first_above(draw, prev, hi, t)
            masses[t] += bound - prev
            prev = bound
    return masses


def normalized(values):
    total = float(sum(values))
    return [v / total for v in values]
