"""Asynchronous token-passing F+LDA.

Documents are split over p workers. Each word's topic counts travel as a word
token owned by exactly one worker at a time; the global topic totals travel as
a single sum token that every worker folds its local changes into.
"""
from fplus_lda.nomad.controller import NomadController
from fplus_lda.nomad.controller import run_parallel
from fplus_lda.nomad.controller import snapshot_counts
from fplus_lda.nomad.partition import partition_corpus
from fplus_lda.nomad.router import Router
from fplus_lda.nomad.tokens import SumToken
from fplus_lda.nomad.tokens import WordToken
from fplus_lda.nomad.transport import InProcessTransport
from fplus_lda.nomad.transport import Transport
from fplus_lda.nomad.worker import Worker
from fplus_lda.nomad.worker import worker_loop

__all__ = [
    "InProcessTransport",
    "NomadController",
    "Router",
    "SumToken",
    "Transport",
    "Worker",
    "WordToken",
    "partition_corpus",
    "run_parallel",
    "snapshot_counts",
    "worker_loop",
]
