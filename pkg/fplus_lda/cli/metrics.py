import csv
import json
from typing import List

from fplus_lda import constant
from fplus_lda.errors import ConfigError


class MetricsWriter:
    """Streams records as CSV or JSON lines, flushing after each one.

    The CSV header goes out on construction, so an empty run still leaves a
    parseable file.
    """

    def __init__(self, sink, fmt: str = constant.FORMAT_CSV, fields: List[str] = None):
        if fmt not in constant.SUPPORTED_FORMATS:
            raise ConfigError(
                f"Invalid output format {fmt}, should be one of {constant.SUPPORTED_FORMATS}",
            )
        self.sink = sink
        self.fmt = fmt
        self.fields = list(fields or constant.TRACE_FIELDS)
        self._csv = None
        if fmt == constant.FORMAT_CSV:
            self._csv = csv.DictWriter(sink, fieldnames=self.fields, lineterminator="\n")
            self._csv.writeheader()
            sink.flush()

    def write(self, record):
        row = record.to_dict() if hasattr(record, "to_dict") else dict(record)
        row = {k: row[k] for k in self.fields}
        if self._csv is not None:
            self._csv.writerow(row)
        else:
            self.sink.write(json.dumps(row) + "\n")
        self.sink.flush()


def emit_metrics(trace, fmt, sink):
    writer = MetricsWriter(sink, fmt)
    for record in trace:
        writer.write(record)


_INT_FIELDS = {"iter", "workers", "seed"}
_FLOAT_FIELDS = {"loglik", "seconds", "tokens_per_sec"}


def read_metrics(stream, fmt=constant.FORMAT_CSV) -> List[dict]:
    """Parse what :func:`emit_metrics` wrote back into typed dicts."""
    if fmt == constant.FORMAT_JSONL:
        return [json.loads(line) for line in stream if line.strip()]
    rows = []
    for row in csv.DictReader(stream):
        for k in _INT_FIELDS & row.keys():
            row[k] = int(row[k])
        for k in _FLOAT_FIELDS & row.keys():
            row[k] = float(row[k])
        rows.append(row)
    return rows
