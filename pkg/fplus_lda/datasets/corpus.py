from typing import List
from typing import Optional

import numpy as np

from fplus_lda.errors import CorpusValidationError


class Corpus:
    """Bag-of-words documents flattened into one token stream.

    Tokens are stored document-major: the tokens of document ``d`` occupy
    ``doc_offsets[d]:doc_offsets[d + 1]``. The word-major view lists the same
    token positions ordered by word, then document, then position, with word
    ``w`` occupying ``word_offsets[w]:word_offsets[w + 1]`` of ``word_positions``.

    The corpus is immutable once built and may be shared read-only.
    """

    def __init__(
        self,
        doc_lengths,
        token_words,
        vocab_size: int,
        vocab: Optional[List[str]] = None,
    ):
        doc_lengths = np.asarray(doc_lengths, dtype=np.int64)
        token_words = np.asarray(token_words, dtype=np.int64)
        if doc_lengths.size and doc_lengths.min() < 0:
            raise CorpusValidationError("document lengths must be non-negative")
        if int(doc_lengths.sum()) != token_words.size:
            raise CorpusValidationError(
                f"document lengths sum to {int(doc_lengths.sum())} "
                f"but there are {token_words.size} tokens",
            )
        if token_words.size and (token_words.min() < 0 or token_words.max() >= vocab_size):
            raise CorpusValidationError(f"word id outside [0, {vocab_size})")
        if vocab is not None and len(vocab) != vocab_size:
            raise CorpusValidationError(
                f"vocabulary has {len(vocab)} entries, expected {vocab_size}",
            )

        self.num_docs = int(doc_lengths.size)
        self.vocab_size = int(vocab_size)
        self.vocab = vocab
        self.doc_offsets = np.zeros(self.num_docs + 1, dtype=np.int64)
        np.cumsum(doc_lengths, out=self.doc_offsets[1:])
        self.token_words = token_words
        self.token_docs = np.repeat(np.arange(self.num_docs, dtype=np.int64), doc_lengths)

        # stable sort keeps document order inside each word
        self.word_positions = np.argsort(token_words, kind="stable")
        word_counts = np.bincount(token_words, minlength=self.vocab_size)
        self.word_offsets = np.zeros(self.vocab_size + 1, dtype=np.int64)
        np.cumsum(word_counts, out=self.word_offsets[1:])

        for arr in (self.doc_offsets, self.token_words, self.token_docs,
                    self.word_positions, self.word_offsets):
            arr.setflags(write=False)
        self._token_docs_list = None
        self._token_words_list = None
        self._check_views()

    @classmethod
    def from_documents(cls, documents, vocab_size: int, vocab=None) -> "Corpus":
        """Build from a list of word-id lists."""
        lengths = [len(doc) for doc in documents]
        words = [w for doc in documents for w in doc]
        return cls(lengths, words, vocab_size, vocab)

    def _check_views(self):
        by_doc = np.bincount(self.token_words, minlength=self.vocab_size)
        by_word = np.diff(self.word_offsets)
        if not np.array_equal(by_doc, by_word):
            raise CorpusValidationError("document-major and word-major views disagree")

    @property
    def num_tokens(self) -> int:
        return int(self.token_words.size)

    def doc_length(self, d: int) -> int:
        return int(self.doc_offsets[d + 1] - self.doc_offsets[d])

    def doc_lengths(self) -> np.ndarray:
        return np.diff(self.doc_offsets)

    def document(self, d: int) -> np.ndarray:
        return self.token_words[self.doc_offsets[d]:self.doc_offsets[d + 1]]

    def word_occurrences(self, w: int) -> np.ndarray:
        """Token positions of word ``w`` in ascending document order."""
        return self.word_positions[self.word_offsets[w]:self.word_offsets[w + 1]]

    def word_frequencies(self) -> np.ndarray:
        return np.diff(self.word_offsets)

    def token_docs_list(self) -> List[int]:
        if self._token_docs_list is None:
            self._token_docs_list = self.token_docs.tolist()
        return self._token_docs_list

    def token_words_list(self) -> List[int]:
        if self._token_words_list is None:
            self._token_words_list = self.token_words.tolist()
        return self._token_words_list

    def word_major_lists(self) -> List[List[int]]:
        """Per-word token positions as plain lists, for the sampling loops.

        The list is rebuilt on every call; callers may keep and slice it.
        """
        positions = self.word_positions.tolist()
        offsets = self.word_offsets.tolist()
        return [positions[offsets[w]:offsets[w + 1]] for w in range(self.vocab_size)]

    def doc_major_lists(self) -> List[range]:
        offsets = self.doc_offsets.tolist()
        return [range(offsets[d], offsets[d + 1]) for d in range(self.num_docs)]

    def __repr__(self):
        return (
            f"Corpus(num_docs={self.num_docs}, vocab_size={self.vocab_size}, "
            f"num_tokens={self.num_tokens})"
        )
