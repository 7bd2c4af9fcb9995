from dataclasses import asdict
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from fplus_lda.datasets.corpus import Corpus
from fplus_lda.models import validation


@dataclass(frozen=True)
class SyntheticSpec:
    num_docs: int
    vocab_size: int
    num_topics: int
    mean_doc_length: float
    alpha: float
    beta: float
    seed: int = 0

    def __post_init__(self):
        validation.validate_synthetic_spec(asdict(self))


def _dirichlet(rng, concentration, size):
    """Dirichlet rows via normalised gammas; rows that underflow to zero get
    their mass on one random coordinate."""
    gammas = rng.standard_gamma(concentration, size=(size, len(concentration)))
    sums = gammas.sum(axis=1)
    for row in np.flatnonzero(sums <= 0.0):
        gammas[row, rng.integers(len(concentration))] = 1.0
        sums[row] = 1.0
    return gammas / sums[:, None]


def generate_synthetic(spec: SyntheticSpec) -> Tuple[Corpus, np.ndarray, np.ndarray]:
    """Draw a corpus from the LDA generative process.

    Topics ``φ_k ~ Dirichlet(β)``, proportions ``θ_i ~ Dirichlet(α)``, document
    lengths ``max(1, Poisson(mean))``, then per token a topic from ``θ_i`` and a
    word from ``φ_topic``.

    Returns:
        the corpus, the planted topics φ with shape (T, J) and the planted
        proportions θ with shape (I, T).
    """
    rng = np.random.default_rng(spec.seed)
    phi = _dirichlet(rng, np.full(spec.vocab_size, spec.beta), spec.num_topics)
    theta = _dirichlet(rng, np.full(spec.num_topics, spec.alpha), spec.num_docs)
    lengths = np.maximum(1, rng.poisson(spec.mean_doc_length, size=spec.num_docs))

    documents = []
    for i in range(spec.num_docs):
        topics = rng.choice(spec.num_topics, size=int(lengths[i]), p=theta[i])
        words = np.empty(len(topics), dtype=np.int64)
        for k in np.unique(topics):
            mask = topics == k
            words[mask] = rng.choice(spec.vocab_size, size=int(mask.sum()), p=phi[k])
        documents.append(words)

    corpus = Corpus(
        lengths,
        np.concatenate(documents) if documents else np.empty(0, dtype=np.int64),
        spec.vocab_size,
    )
    return corpus, phi, theta
