from fplus_lda.io.checkpoint import load_state
from fplus_lda.io.checkpoint import load_train_state
from fplus_lda.io.checkpoint import save_state
from fplus_lda.io.checkpoint import save_train_state

__all__ = ["load_state", "load_train_state", "save_state", "save_train_state"]
