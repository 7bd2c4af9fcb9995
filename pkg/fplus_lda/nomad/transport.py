"""How tokens move between workers.

A token is handed over by value: the sender must not touch it after ``send``.
"""
import abc
import queue
from typing import List
from typing import Optional

from fplus_lda.errors import ContractViolationError
from fplus_lda.errors import TransportClosedError
from fplus_lda.nomad.tokens import decode_token


class Transport(abc.ABC):
    @abc.abstractmethod
    def send(self, dest: int, token):
        pass

    @abc.abstractmethod
    def receive(self, worker: int, timeout: Optional[float] = None):
        """Block up to ``timeout`` seconds for one token; None if nothing came."""

    @abc.abstractmethod
    def drain(self, worker: int) -> List:
        """Every token currently waiting for ``worker``, in arrival order."""

    @abc.abstractmethod
    def pending(self) -> int:
        """Tokens sent but not yet received, over all workers."""

    @abc.abstractmethod
    def close(self):
        pass


class InProcessTransport(Transport):
    """One unbounded FIFO per worker.

    With ``wire=True`` every token is encoded on send and decoded on receive,
    exercising the byte format a network transport would use.
    """

    def __init__(self, num_workers: int, wire: bool = False):
        self.num_workers = num_workers
        self.wire = wire
        self.inboxes = [queue.Queue() for _ in range(num_workers)]
        self.closed = False

    def _check_worker(self, worker):
        if not 0 <= worker < self.num_workers:
            raise ContractViolationError(f"worker {worker} outside [0, {self.num_workers})")

    def _unpack(self, item):
        return decode_token(item) if self.wire else item

    def send(self, dest: int, token):
        if self.closed:
            raise TransportClosedError(f"cannot send to worker {dest}: transport is closed")
        self._check_worker(dest)
        self.inboxes[dest].put(token.to_bytes() if self.wire else token)

    def receive(self, worker: int, timeout: Optional[float] = None):
        self._check_worker(worker)
        try:
            item = self.inboxes[worker].get(timeout=timeout)
        except queue.Empty:
            return None
        return self._unpack(item)

    def drain(self, worker: int) -> List:
        self._check_worker(worker)
        inbox = self.inboxes[worker]
        tokens = []
        while True:
            try:
                tokens.append(self._unpack(inbox.get_nowait()))
            except queue.Empty:
                return tokens

    def pending(self) -> int:
        return sum(inbox.qsize() for inbox in self.inboxes)

    def close(self):
        self.closed = True
