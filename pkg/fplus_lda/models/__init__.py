from fplus_lda.models.count_model import CountModel
from fplus_lda.models.decomposition import Order
from fplus_lda.models.decomposition import decompose
from fplus_lda.models.decomposition import two_level_sample
from fplus_lda.models.hyper import HyperParams
from fplus_lda.models.likelihood import joint_log_likelihood
from fplus_lda.models.sparse_counts import SparseCounts

__all__ = [
    "CountModel",
    "HyperParams",
    "Order",
    "SparseCounts",
    "decompose",
    "joint_log_likelihood",
    "two_level_sample",
]
