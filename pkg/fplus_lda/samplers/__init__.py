"""Updatable samplers for unnormalised T-dimensional multinomials.

Randomness never enters these structures: every ``sample`` takes the uniform
draw ``u`` from the caller, so the exact samplers agree index for index.
"""
from fplus_lda.samplers.alias import AliasSampler
from fplus_lda.samplers.alias import AliasTable
from fplus_lda.samplers.alias import alias_build
from fplus_lda.samplers.alias import alias_sample
from fplus_lda.samplers.cumsum import Cdf
from fplus_lda.samplers.cumsum import CumsumSampler
from fplus_lda.samplers.cumsum import bsearch_sample
from fplus_lda.samplers.cumsum import cumsum_build
from fplus_lda.samplers.ftree import FTree
from fplus_lda.samplers.ftree import ftree_build
from fplus_lda.samplers.ftree import ftree_sample
from fplus_lda.samplers.ftree import ftree_total
from fplus_lda.samplers.ftree import ftree_update
from fplus_lda.samplers.lsearch import LinearSampler
from fplus_lda.samplers.lsearch import lsearch_sample

__all__ = [
    "AliasSampler",
    "AliasTable",
    "Cdf",
    "CumsumSampler",
    "FTree",
    "LinearSampler",
    "alias_build",
    "alias_sample",
    "bsearch_sample",
    "cumsum_build",
    "ftree_build",
    "ftree_sample",
    "ftree_total",
    "ftree_update",
    "lsearch_sample",
]
