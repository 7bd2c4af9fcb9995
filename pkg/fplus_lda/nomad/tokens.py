"""Nomadic tokens and their little-endian wire form.

Word token:  kind (u8) | word id (i32) | visits (u32) | entries (u32) | (topic i32, count i32) * entries
Sum token:   kind (u8) | T (u32) | counts (i64) * T
"""
import struct
from typing import List

import numpy as np

from fplus_lda.errors import ContractViolationError
from fplus_lda.models.sparse_counts import SparseCounts

KIND_WORD = 1
KIND_SUM = 2

_WORD_HEADER = struct.Struct("<BiII")
_SUM_HEADER = struct.Struct("<BI")
_PAIR_DTYPE = np.dtype("<i4")
_COUNT_DTYPE = np.dtype("<i8")


class WordToken:
    """The only copy of ``n_tw`` for one word; whoever holds it may sample it.

    Attributes:
        word: 0-based word id.
        counts: the word's topic counts, every listed count >= 1.
        visits: worker visits so far; an epoch ends at each multiple of p.
    """

    __slots__ = ("word", "counts", "visits")

    def __init__(self, word: int, counts: SparseCounts, visits: int = 0):
        self.word = word
        self.counts = counts
        self.visits = visits

    def __repr__(self):
        return f"WordToken(word={self.word}, visits={self.visits}, counts={self.counts!r})"

    def to_bytes(self) -> bytes:
        pairs = np.empty((len(self.counts), 2), dtype=_PAIR_DTYPE)
        pairs[:, 0] = self.counts.topics
        pairs[:, 1] = self.counts.counts
        header = _WORD_HEADER.pack(KIND_WORD, self.word, self.visits, len(self.counts))
        return header + pairs.tobytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> "WordToken":
        if len(data) < _WORD_HEADER.size:
            raise ContractViolationError("truncated word token")
        kind, word, visits, n = _WORD_HEADER.unpack_from(data)
        if kind != KIND_WORD:
            raise ContractViolationError(f"not a word token: kind {kind}")
        expected = _WORD_HEADER.size + n * 2 * _PAIR_DTYPE.itemsize
        if len(data) != expected:
            raise ContractViolationError(
                f"word token of {n} entries needs {expected} bytes, got {len(data)}",
            )
        pairs = np.frombuffer(data, dtype=_PAIR_DTYPE, offset=_WORD_HEADER.size).reshape(n, 2)
        counts = SparseCounts(pairs[:, 0].tolist(), pairs[:, 1].tolist())
        return cls(word, counts, visits)


class SumToken:
    """Carrier of the global topic totals ``s``."""

    __slots__ = ("totals",)

    def __init__(self, totals: List[int]):
        self.totals = totals

    def __repr__(self):
        return f"SumToken(totals={self.totals})"

    def to_bytes(self) -> bytes:
        body = np.asarray(self.totals, dtype=_COUNT_DTYPE)
        return _SUM_HEADER.pack(KIND_SUM, body.size) + body.tobytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> "SumToken":
        if len(data) < _SUM_HEADER.size:
            raise ContractViolationError("truncated sum token")
        kind, n = _SUM_HEADER.unpack_from(data)
        if kind != KIND_SUM:
            raise ContractViolationError(f"not a sum token: kind {kind}")
        if len(data) != _SUM_HEADER.size + n * _COUNT_DTYPE.itemsize:
            raise ContractViolationError(f"sum token of {n} topics has {len(data)} bytes")
        body = np.frombuffer(data, dtype=_COUNT_DTYPE, offset=_SUM_HEADER.size)
        return cls(body.tolist())


def decode_token(data: bytes):
    if not data:
        raise ContractViolationError("empty token")
    if data[0] == KIND_WORD:
        return WordToken.from_bytes(data)
    if data[0] == KIND_SUM:
        return SumToken.from_bytes(data)
    raise ContractViolationError(f"unknown token kind {data[0]}")
