from fplus_lda.trainers.config import TrainerConfig
from fplus_lda.trainers.serial import SerialTrainer
from fplus_lda.trainers.serial import TrainState
from fplus_lda.trainers.serial import alias_lda_epoch
from fplus_lda.trainers.serial import flda_doc_epoch
from fplus_lda.trainers.serial import flda_word_epoch
from fplus_lda.trainers.serial import init_assignments
from fplus_lda.trainers.serial import sparse_lda_epoch
from fplus_lda.trainers.serial import train
from fplus_lda.trainers.trace import TraceRecord
from fplus_lda.trainers.trace import TrainTrace

__all__ = [
    "SerialTrainer",
    "TraceRecord",
    "TrainState",
    "TrainTrace",
    "TrainerConfig",
    "alias_lda_epoch",
    "flda_doc_epoch",
    "flda_word_epoch",
    "init_assignments",
    "sparse_lda_epoch",
    "train",
]
