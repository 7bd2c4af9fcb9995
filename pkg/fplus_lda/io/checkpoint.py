"""Binary checkpoints of assignments and counts.

Layout, all little-endian:

    header   magic "FLDA" | version u8 | flags u8 | I u32 | J u32 | T u32
             | tokens u64 | iteration u64 | alpha f64 | beta f64
    docs     indptr i64[I+1] | topics i32[nnz] | counts i32[nnz]
    words    indptr i64[J+1] | topics i32[nnz] | counts i32[nnz]
    totals   i64[T]
    z        i32[tokens]
    rng      (flags bit 0) length u32 | UTF-8 JSON of the bit generator state
"""
import json
import logging
import os
import struct
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np

from fplus_lda import constant
from fplus_lda.errors import CheckpointError
from fplus_lda.errors import ConfigError
from fplus_lda.errors import ConsistencyError
from fplus_lda.models.count_model import CountModel
from fplus_lda.models.hyper import HyperParams
from fplus_lda.models.sparse_counts import SparseCounts
from fplus_lda.trainers.serial import TrainState

_HEADER = struct.Struct("<4sBBIIIQQdd")
_LENGTH = struct.Struct("<I")
_FLAG_RNG = 1

_I32 = np.dtype("<i4")
_I64 = np.dtype("<i8")


def _rows_to_csr(rows: List[SparseCounts]) -> bytes:
    indptr = np.zeros(len(rows) + 1, dtype=_I64)
    np.cumsum([len(r) for r in rows], out=indptr[1:])
    topics = np.fromiter((t for r in rows for t in r.topics), dtype=_I32, count=int(indptr[-1]))
    counts = np.fromiter((c for r in rows for c in r.counts), dtype=_I32, count=int(indptr[-1]))
    return indptr.tobytes() + topics.tobytes() + counts.tobytes()


def save_state(path, z, model: CountModel, rng_state: Optional[dict] = None, iteration: int = 0):
    """Write ``z`` and ``model`` (and optionally an RNG state) to ``path``."""
    hyper = model.hyper
    flags = _FLAG_RNG if rng_state is not None else 0
    header = _HEADER.pack(
        constant.CHECKPOINT_MAGIC,
        constant.CHECKPOINT_VERSION,
        flags,
        model.num_docs,
        hyper.vocab_size,
        hyper.num_topics,
        len(z),
        iteration,
        hyper.alpha,
        hyper.beta,
    )
    parts = [
        header,
        _rows_to_csr(model.doc_topic),
        _rows_to_csr(model.word_topic),
        np.asarray(model.topic_totals, dtype=_I64).tobytes(),
        np.asarray(z, dtype=_I32).tobytes(),
    ]
    if rng_state is not None:
        blob = json.dumps(rng_state, sort_keys=True).encode("utf-8")
        parts.append(_LENGTH.pack(len(blob)) + blob)
    tmp = f"{path}.tmp"
    with open(tmp, "wb") as f:
        for part in parts:
            f.write(part)
    os.replace(tmp, path)
    logging.debug("checkpoint of %d tokens written to %s", len(z), path)


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.offset = 0

    def take(self, size, what):
        if size < 0 or self.offset + size > len(self.data):
            raise CheckpointError(f"checkpoint truncated while reading {what}")
        start = self.offset
        self.offset += size
        return start

    def array(self, dtype, count, what):
        start = self.take(count * dtype.itemsize, what)
        return np.frombuffer(self.data, dtype=dtype, count=count, offset=start)

    def rows(self, num_rows, num_topics, what) -> List[SparseCounts]:
        indptr = self.array(_I64, num_rows + 1, f"{what} offsets")
        if indptr[0] != 0 or np.any(np.diff(indptr) < 0):
            raise CheckpointError(f"corrupt {what} offsets")
        nnz = int(indptr[-1])
        topics = self.array(_I32, nnz, f"{what} topics")
        counts = self.array(_I32, nnz, f"{what} counts")
        if nnz and (topics.min() < 0 or topics.max() >= num_topics or counts.min() < 1):
            raise CheckpointError(f"corrupt {what} entries")
        starts = np.zeros(nnz, dtype=bool)
        starts[indptr[:-1][indptr[:-1] < nnz]] = True
        if nnz and np.any(np.diff(topics)[~starts[1:]] <= 0):
            raise CheckpointError(f"{what} topics are not strictly increasing within a row")
        topics = topics.tolist()
        counts = counts.tolist()
        bounds = indptr.tolist()
        return [
            SparseCounts(topics[bounds[i]:bounds[i + 1]], counts[bounds[i]:bounds[i + 1]])
            for i in range(num_rows)
        ]


def _check_doc_rows(z, doc_rows):
    """Recount every document row from its slice of the document-major ``z``."""
    offset = 0
    for d, row in enumerate(doc_rows):
        length = row.total()
        if offset + length > z.size:
            raise CheckpointError("document counts cover more tokens than the assignments")
        topics, counts = np.unique(z[offset:offset + length], return_counts=True)
        if topics.tolist() != row.topics or counts.tolist() != row.counts:
            raise CheckpointError(f"assignments of document {d} disagree with its counts")
        offset += length
    if offset != z.size:
        raise CheckpointError("assignments not covered by document counts")


def _read(path):
    try:
        with open(path, "rb") as f:
            data = f.read()
    except OSError as e:
        raise CheckpointError(f"cannot read checkpoint {path}: {e}") from e

    reader = _Reader(data)
    start = reader.take(_HEADER.size, "header")
    (magic, version, flags, num_docs, vocab_size, num_topics,
     num_tokens, iteration, alpha, beta) = _HEADER.unpack_from(data, start)
    if magic != constant.CHECKPOINT_MAGIC:
        raise CheckpointError(f"{path} is not a checkpoint (magic {magic!r})")
    if version != constant.CHECKPOINT_VERSION:
        raise CheckpointError(
            f"checkpoint version {version}, expected {constant.CHECKPOINT_VERSION}",
        )
    try:
        hyper = HyperParams(num_topics, vocab_size, alpha, beta)
    except ConfigError as e:
        raise CheckpointError(f"corrupt hyper parameters: {e}") from e

    model = CountModel(0, hyper)
    model.doc_topic = reader.rows(num_docs, num_topics, "document")
    model.word_topic = reader.rows(vocab_size, num_topics, "word")
    model.topic_totals = reader.array(_I64, num_topics, "topic totals").tolist()
    z = reader.array(_I32, num_tokens, "assignments")
    if num_tokens and (z.min() < 0 or z.max() >= num_topics):
        raise CheckpointError("assignment outside the topic range")
    _check_doc_rows(z, model.doc_topic)
    z = z.tolist()

    rng_state = None
    if flags & _FLAG_RNG:
        start = reader.take(_LENGTH.size, "RNG state length")
        (length,) = _LENGTH.unpack_from(data, start)
        start = reader.take(length, "RNG state")
        try:
            rng_state = json.loads(data[start:start + length].decode("utf-8"))
        except ValueError as e:
            raise CheckpointError(f"corrupt RNG state: {e}") from e
    if reader.offset != len(data):
        raise CheckpointError(f"{len(data) - reader.offset} trailing bytes in checkpoint")

    try:
        model.check_invariants()
    except ConsistencyError as e:
        raise CheckpointError(f"inconsistent counts in checkpoint: {e}") from e
    if sum(model.topic_totals) != num_tokens:
        raise CheckpointError("counts do not cover the assignments")
    return z, model, rng_state, iteration


def load_state(path) -> Tuple[List[int], CountModel]:
    """Read back what :func:`save_state` wrote.

    Raises:
        CheckpointError: wrong magic or version, truncation, or corrupt fields.
    """
    z, model, _, _ = _read(path)
    return z, model


def save_train_state(path, state: TrainState):
    save_state(path, state.z, state.model, state.rng_state, state.iteration)


def load_train_state(path):
    """Read a resumable :class:`TrainState`."""
    z, model, rng_state, iteration = _read(path)
    if rng_state is None:
        raise CheckpointError(f"{path} carries no RNG state and cannot be resumed")
    return TrainState(z=z, model=model, rng_state=rng_state, iteration=iteration)
