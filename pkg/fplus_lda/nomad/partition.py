import heapq
from typing import List

from fplus_lda.models import validation


def partition_corpus(corpus, p: int) -> List[List[int]]:
    """Split documents over ``p`` workers, balancing token counts.

    Documents are placed largest first into the currently lightest bin, ties
    going to the lower bin; each returned bin is sorted by document id.
    """
    validation.validate_workers(p)
    lengths = corpus.doc_lengths().tolist()
    order = sorted(range(len(lengths)), key=lambda d: -lengths[d])
    bins = [[] for _ in range(p)]
    heap = [(0, l) for l in range(p)]
    for d in order:
        load, l = heapq.heappop(heap)
        bins[l].append(d)
        heapq.heappush(heap, (load + lengths[d], l))
    return [sorted(b) for b in bins]
