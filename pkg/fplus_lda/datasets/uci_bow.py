"""Reader for the UCI bag-of-words layout.

A docword file holds three header lines ``D``, ``W`` and ``NNZ`` followed by
``NNZ`` lines ``docID wordID count`` with 1-based ids. The optional vocab file
lists one word per line. Paths ending in ``.gz`` are read through gzip, the
way the UCI repository ships them.
"""
import gzip
import logging
import os

import numpy as np

from fplus_lda.datasets.corpus import Corpus
from fplus_lda.errors import CorpusParseError
from fplus_lda.errors import CorpusValidationError


def _open(source):
    if isinstance(source, (str, os.PathLike)):
        if os.fspath(source).endswith(".gz"):
            return gzip.open(source, "rt", encoding="utf-8"), True
        return open(source, encoding="utf-8"), True
    return source, False


def _parse_int(field, line_number):
    try:
        return int(field)
    except ValueError as e:
        raise CorpusParseError(line_number, f"not an integer: {field!r}") from e


def _content_lines(stream):
    for line_number, line in enumerate(stream, start=1):
        fields = line.split()
        if fields:
            yield line_number, fields


def parse_uci_bow(docword, vocab=None) -> Corpus:
    """Parse a UCI docword stream (path or text file object) into a :class:`Corpus`.

    Args:
        docword: path or open text stream of the docword file.
        vocab: optional path or stream of the vocabulary file.

    Raises:
        CorpusParseError: a header or body line is malformed.
        CorpusValidationError: an id is out of range, a count is below 1, or the
            number of body lines differs from NNZ.
    """
    stream, owned = _open(docword)
    try:
        lines = _content_lines(stream)
        header = []
        for line_number, fields in lines:
            if len(fields) != 1:
                raise CorpusParseError(line_number, "header lines hold a single integer")
            header.append(_parse_int(fields[0], line_number))
            if len(header) == 3:
                break
        if len(header) != 3:
            raise CorpusParseError(len(header) + 1, "missing D, W, NNZ header")
        num_docs, vocab_size, nnz = header
        if num_docs < 0 or vocab_size < 0 or nnz < 0:
            raise CorpusValidationError(f"negative header value in {header}")

        docs = np.empty(nnz, dtype=np.int64)
        words = np.empty(nnz, dtype=np.int64)
        counts = np.empty(nnz, dtype=np.int64)
        n = 0
        for line_number, fields in lines:
            if len(fields) != 3:
                raise CorpusParseError(line_number, f"expected 3 fields, got {len(fields)}")
            d, w, c = (_parse_int(f, line_number) for f in fields)
            if not 1 <= d <= num_docs or not 1 <= w <= vocab_size:
                raise CorpusValidationError(
                    f"line {line_number}: id ({d}, {w}) outside [1, {num_docs}]x[1, {vocab_size}]",
                )
            if c < 1:
                raise CorpusValidationError(f"line {line_number}: count {c} < 1")
            if n == nnz:
                raise CorpusValidationError(f"more than NNZ={nnz} body lines")
            docs[n], words[n], counts[n] = d - 1, w - 1, c
            n += 1
        if n != nnz:
            raise CorpusValidationError(f"expected NNZ={nnz} body lines, found {n}")
    finally:
        if owned:
            stream.close()

    order = np.argsort(docs, kind="stable")
    docs, words, counts = docs[order], words[order], counts[order]
    token_words = np.repeat(words, counts)
    doc_lengths = np.bincount(np.repeat(docs, counts), minlength=num_docs)

    names = None
    if vocab is not None:
        names = _read_vocab(vocab)
        if len(names) != vocab_size:
            raise CorpusValidationError(
                f"vocabulary has {len(names)} entries, header says W={vocab_size}",
            )
    corpus = Corpus(doc_lengths, token_words, vocab_size, names)
    empty = int(np.sum(doc_lengths == 0))
    if empty:
        logging.warning("%d of %d documents are empty", empty, num_docs)
    logging.info("parsed %s", corpus)
    return corpus


def _read_vocab(vocab):
    stream, owned = _open(vocab)
    try:
        return [line.strip() for line in stream if line.strip()]
    finally:
        if owned:
            stream.close()


def write_uci_bow(corpus: Corpus, stream):
    """Write ``corpus`` in the docword layout (used to produce fixtures)."""
    rows = []
    for d in range(corpus.num_docs):
        words, counts = np.unique(corpus.document(d), return_counts=True)
        rows.extend((d + 1, int(w) + 1, int(c)) for w, c in zip(words, counts))
    stream.write(f"{corpus.num_docs}\n{corpus.vocab_size}\n{len(rows)}\n")
    for d, w, c in rows:
        stream.write(f"{d} {w} {c}\n")
