from typing import List
from typing import Tuple

import numpy as np
from scipy.special import gammaln


def _sparse_terms(supports, prior):
    """Σ over supports of lnΓ(n + prior) - lnΓ(prior), zero counts contribute nothing."""
    counts = [c for counts in supports for c in counts.counts]
    if not counts:
        return 0.0
    values = np.asarray(counts, dtype=np.float64)
    return float(np.sum(gammaln(values + prior)) - len(counts) * gammaln(prior))


def joint_log_likelihood(model) -> float:
    """Collapsed joint ``log p(w, z)`` from counts alone.

    Documents contribute ``lnΓ(Tα) - lnΓ(n_d + Tα) + Σ_t [lnΓ(n_td + α) - lnΓ(α)]``
    and topics ``lnΓ(Jβ) - lnΓ(n_t + Jβ) + Σ_w [lnΓ(n_tw + β) - lnΓ(β)]``.
    """
    if model.num_tokens == 0:
        return 0.0
    hyper = model.hyper
    T = hyper.num_topics
    alpha_sum = T * hyper.alpha
    beta_bar = hyper.beta_bar

    lengths = np.asarray(model.doc_lengths(), dtype=np.float64)
    doc_part = _sparse_terms(model.doc_topic, hyper.alpha)
    if lengths.size:
        doc_part += float(
            lengths.size * gammaln(alpha_sum) - np.sum(gammaln(lengths + alpha_sum))
        )

    totals = np.asarray(model.topic_totals, dtype=np.float64)
    topic_part = _sparse_terms(model.word_topic, hyper.beta)
    topic_part += float(T * gammaln(beta_bar) - np.sum(gammaln(totals + beta_bar)))
    return doc_part + topic_part


def dense_log_likelihood(n_td: np.ndarray, n_tw: np.ndarray, alpha: float, beta: float) -> float:
    """The same quantity from dense (I, T) and (J, T) count matrices."""
    num_docs, T = n_td.shape
    J = n_tw.shape[0]
    value = num_docs * (gammaln(T * alpha) - T * gammaln(alpha))
    value += np.sum(gammaln(n_td + alpha)) - np.sum(gammaln(n_td.sum(axis=1) + T * alpha))
    value += T * (gammaln(J * beta) - J * gammaln(beta))
    value += np.sum(gammaln(n_tw + beta)) - np.sum(gammaln(n_tw.sum(axis=0) + J * beta))
    return float(value)


def topic_recovery(phi_true: np.ndarray, phi_est: np.ndarray) -> Tuple[float, List[Tuple[int, int, float]]]:
    """Greedily align estimated topics to planted ones by cosine similarity.

    Returns:
        the mean cosine of the aligned pairs, and the ``(true, estimated, cosine)``
        pairs in the order they were matched.
    """
    a = phi_true / np.linalg.norm(phi_true, axis=1, keepdims=True)
    b = phi_est / np.linalg.norm(phi_est, axis=1, keepdims=True)
    cosine = a @ b.T
    pairs = []
    used_true, used_est = set(), set()
    order = np.argsort(-cosine, axis=None, kind="stable")
    for flat in order:
        i, j = np.unravel_index(flat, cosine.shape)
        if i in used_true or j in used_est:
            continue
        used_true.add(i)
        used_est.add(j)
        pairs.append((int(i), int(j), float(cosine[i, j])))
        if len(pairs) == min(cosine.shape):
            break
    return float(np.mean([c for _, _, c in pairs])), pairs
