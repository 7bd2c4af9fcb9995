import numpy as np
import pytest

from fplus_lda.datasets import Corpus
from fplus_lda.datasets import SyntheticSpec
from fplus_lda.datasets import generate_synthetic
from fplus_lda.models import CountModel
from fplus_lda.models import HyperParams
from fplus_lda.trainers import TrainerConfig
from fplus_lda.trainers import init_assignments


PLANTED_TOPICS = 5


def planted_spec():
    return SyntheticSpec(
        num_docs=500,
        vocab_size=200,
        num_topics=PLANTED_TOPICS,
        mean_doc_length=50,
        alpha=0.1,
        beta=0.01,
        seed=2015,
    )


@pytest.fixture(scope="session")
def planted():
    """The planted corpus with its true topics and proportions."""
    return generate_synthetic(planted_spec())


def planted_config(corpus, iterations, algorithm="flda-word", seed=1):
    hyper = HyperParams(num_topics=PLANTED_TOPICS, vocab_size=corpus.vocab_size, alpha=0.1)
    return TrainerConfig(algorithm=algorithm, iterations=iterations, hyper=hyper, seed=seed)


def total_variation(p, q):
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    return 0.5 * float(np.abs(p / p.sum() - q / q.sum()).sum())


def frozen_state(seed=3):
    """A 3-document, T=4 state with the first token's counts removed."""
    corpus = Corpus.from_documents([[0, 1, 1, 2], [2, 3, 4], [0, 4, 4, 1, 3]], vocab_size=5)
    hyper = HyperParams(num_topics=4, vocab_size=5, alpha=0.5, beta=0.1)
    z = init_assignments(corpus, hyper, seed)
    model = CountModel.from_assignments(corpus, z, hyper)
    d, w = int(corpus.token_docs[0]), int(corpus.token_words[0])
    model.remove_token(d, w, z[0])
    return model, d, w, z[0]
