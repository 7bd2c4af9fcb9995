from dataclasses import asdict
from dataclasses import dataclass
from typing import List
from typing import Optional

from prettytable import PrettyTable


@dataclass
class TraceRecord:
    iter: int
    loglik: float
    seconds: float
    tokens_per_sec: float
    algorithm: str
    workers: int
    seed: int

    def to_dict(self):
        return asdict(self)


@dataclass
class TrainTrace:
    """One record per completed iteration, plus the likelihood before training."""

    records: List[TraceRecord]
    initial_loglik: Optional[float] = None

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def append(self, record: TraceRecord):
        self.records.append(record)

    @property
    def final_loglik(self):
        return self.records[-1].loglik if self.records else self.initial_loglik

    def summary_table(self) -> PrettyTable:
        table = PrettyTable(["iter", "loglik", "seconds", "tokens/sec"])
        for r in self.records:
            table.add_row(
                [r.iter, f"{r.loglik:.4f}", f"{r.seconds:.3f}", f"{r.tokens_per_sec:.0f}"]
            )
        return table
