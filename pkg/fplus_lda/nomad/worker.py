import collections
import logging
from typing import Dict
from typing import List

from fplus_lda.models.hyper import HyperParams
from fplus_lda.models.sparse_counts import SparseCounts
from fplus_lda.nomad.tokens import SumToken
from fplus_lda.nomad.tokens import WordToken
from fplus_lda.trainers.word_order import sample_word_occurrences
from fplus_lda.trainers.word_order import WordOrderSampler

# seconds an idle worker blocks before rechecking the stop signal
IDLE_TIMEOUT = 0.005


class Worker:
    """State private to one worker.

    Attributes:
        worker_id: index l.
        num_workers: p; a word token finishes an epoch every p visits.
        doc_topic: ``n_td`` of the owned documents, keyed by document id.
        positions: per word, this worker's token positions in ascending
            document order; words without local occurrences are absent.
        shadow: s_l, the local working copy of the topic totals.
        snapshot: s̄, the totals as of the sum token's last visit.
        running: set while ``worker_loop`` is executing.
    """

    def __init__(
        self,
        worker_id: int,
        num_workers: int,
        doc_topic: Dict[int, SparseCounts],
        positions: Dict[int, List[int]],
        token_docs: List[int],
        z: List[int],
        totals: List[int],
        hyper: HyperParams,
        rng,
    ):
        self.worker_id = worker_id
        self.num_workers = num_workers
        self.doc_topic = doc_topic
        self.positions = positions
        self.token_docs = token_docs
        self.z = z
        self.shadow = list(totals)
        self.snapshot = list(totals)
        self.rng = rng
        self.sampler = WordOrderSampler(hyper, self.shadow)
        self.running = False
        self.words_processed = 0
        self.merges = 0

    def process_word_token(self, token: WordToken) -> WordToken:
        """Resample this worker's occurrences of ``token.word``.

        Raises:
            ConsistencyError: the payload or the shadow would go negative.
        """
        positions = self.positions.get(token.word)
        if positions:
            sample_word_occurrences(
                self.sampler,
                token.counts,
                self.doc_topic,
                self.shadow,
                positions,
                self.token_docs,
                self.z,
                self.rng,
            )
        token.visits += 1
        self.words_processed += 1
        return token

    def merge_sum_token(self, token: SumToken) -> SumToken:
        """Fold local effort into ``s``, then restart from the merged totals."""
        shadow, snapshot = self.shadow, self.snapshot
        merged = [s + a - b for s, a, b in zip(token.totals, shadow, snapshot)]
        token.totals = merged
        self.snapshot = list(merged)
        # the sampler reads the shadow list, so update it in place
        shadow[:] = merged
        self.sampler.rebuild()
        self.merges += 1
        return token

    def unpublished(self) -> List[int]:
        """s_l − s̄: net count changes not yet folded into the sum token."""
        return [a - b for a, b in zip(self.shadow, self.snapshot)]


def worker_loop(worker: Worker, router, transport, stop, parked):
    """Serve tokens until ``stop`` is set.

    Word tokens completing an epoch go to ``parked`` as ``(token, next worker)``
    instead of being forwarded. Tokens still held when ``stop`` arrives are
    returned to the worker's own inbox.
    """
    me = worker.worker_id
    local = collections.deque()
    worker.running = True
    try:
        while not stop.is_set():
            local.extend(transport.drain(me))
            if not local:
                token = transport.receive(me, timeout=IDLE_TIMEOUT)
                if token is None:
                    continue
                local.append(token)
            token = local.popleft()
            if isinstance(token, SumToken):
                worker.merge_sum_token(token)
                transport.send(router.next(me), token)
                continue
            worker.process_word_token(token)
            dest = router.next(me)
            if token.visits % worker.num_workers == 0:
                logging.debug("worker %d parks word %d for worker %d", me, token.word, dest)
                parked.put((token, dest))
            else:
                transport.send(dest, token)
        while local:
            transport.send(me, local.popleft())
    finally:
        worker.running = False
