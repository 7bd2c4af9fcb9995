"""Two-term splits of the collapsed conditional and the two-level draw.

Doc order:   p = β·q + r with q_t = (n_td + α)/(n_t + β̄), r_t = n_tw·q_t on T_w.
Word order:  p = α·q + r with q_t = (n_tw + β)/(n_t + β̄), r_t = n_td·q_t on T_d.
"""
import enum
from typing import Dict
from typing import Tuple

import numpy as np

from fplus_lda.errors import ContractViolationError
from fplus_lda.samplers.cumsum import Cdf
from fplus_lda.samplers.ftree import FTree


class Order(enum.Enum):
    DOC = "doc"
    WORD = "word"


def decompose(model, d: int, w: int, order: Order) -> Tuple[float, np.ndarray, Dict[int, float]]:
    """Return ``(coef, q, r)`` with ``coef * q + r == p`` elementwise.

    ``q`` is dense, ``r`` maps each topic of the sparse support to its mass.
    """
    hyper = model.hyper
    T = hyper.num_topics
    denom = np.asarray(model.topic_totals, dtype=np.float64) + hyper.beta_bar
    doc_counts = model.doc_topic[d]
    word_counts = model.word_topic[w]
    if order is Order.DOC:
        n_td = np.asarray(doc_counts.to_dense(T), dtype=np.float64)
        q = (n_td + hyper.alpha) / denom
        r = {t: c * float(q[t]) for t, c in word_counts.items()}
        return hyper.beta, q, r
    n_tw = np.asarray(word_counts.to_dense(T), dtype=np.float64)
    q = (n_tw + hyper.beta) / denom
    r = {t: c * float(q[t]) for t, c in doc_counts.items()}
    return hyper.alpha, q, r


def two_level_sample(coef: float, q_tree: FTree, r_cdf: Cdf, u: float) -> int:
    """Draw from ``coef * q + r`` with one uniform ``u``.

    ``u`` below the sparse mass selects from ``r`` by binary search; the rest of
    the range is rescaled by ``1/coef`` and handed to the F+tree.

    Raises:
        ContractViolationError: ``u`` is outside ``[0, coef * F[1] + r_total)``.
    """
    r_total = r_cdf.total
    dense_total = coef * q_tree.total
    if not 0.0 <= u < r_total + dense_total:
        raise ContractViolationError(f"u={u} outside [0, {r_total + dense_total})")
    if u < r_total:
        return r_cdf.sample(u)
    v = (u - r_total) / coef
    if v >= q_tree.total:
        v = float(np.nextafter(q_tree.total, 0.0))
    return q_tree.sample(v)
