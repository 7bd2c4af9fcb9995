from dataclasses import dataclass
from dataclasses import field

from fplus_lda import constant
from fplus_lda.models import validation
from fplus_lda.models.hyper import HyperParams


@dataclass(frozen=True)
class TrainerConfig:
    """What ``train`` runs.

    Attributes:
        algorithm: one of ``constant.SUPPORTED_ALGORITHMS``.
        iterations: number of full sweeps, at least 1.
        hyper: priors; ``hyper.vocab_size`` must match the corpus.
        mh_steps: Metropolis-Hastings steps per token (alias only).
        seed: seeds initialisation and every sampling stream.
        show_progress: draw a tqdm bar over iterations.
    """

    algorithm: str
    iterations: int
    hyper: HyperParams
    mh_steps: int = constant.DEFAULT_MH_STEPS
    seed: int = constant.DEFAULT_SEED
    show_progress: bool = field(default=False, compare=False)

    def __post_init__(self):
        validation.validate_trainer_config(
            {
                "algorithm": self.algorithm,
                "iterations": self.iterations,
                "mh_steps": self.mh_steps,
                "seed": self.seed,
            },
        )
