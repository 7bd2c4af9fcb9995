from dataclasses import dataclass
from typing import Optional

from fplus_lda import constant
from fplus_lda.models import validation


@dataclass(frozen=True)
class HyperParams:
    """Symmetric LDA priors.

    Attributes:
        num_topics: T.
        vocab_size: J; ``beta_bar`` is ``J * beta``.
        alpha: document-topic prior, defaults to ``50 / T``.
        beta: topic-word prior.
    """

    num_topics: int
    vocab_size: int
    alpha: Optional[float] = None
    beta: float = constant.DEFAULT_BETA

    def __post_init__(self):
        if self.alpha is None:
            object.__setattr__(
                self, "alpha", constant.DEFAULT_ALPHA_MASS / self.num_topics
            )
        validation.validate_hyper_params(
            {
                "num_topics": self.num_topics,
                "vocab_size": self.vocab_size,
                "alpha": self.alpha,
                "beta": self.beta,
            },
        )

    @property
    def beta_bar(self) -> float:
        return self.vocab_size * self.beta

    def with_vocab_size(self, vocab_size):
        return HyperParams(self.num_topics, vocab_size, self.alpha, self.beta)
