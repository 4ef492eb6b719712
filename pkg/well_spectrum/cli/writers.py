import csv
import io
import json
from dataclasses import dataclass
from typing import List, Sequence

from param_map import AuditReport
from utils.util import format_complex, format_float


@dataclass(frozen=True)
class Table:
    header: Sequence[str]
    rows: List[tuple]

    def to_dict(self):
        return {"header": list(self.header), "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data["header"]), [tuple(row) for row in data["rows"]])


def _cell(value):
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, complex):
        return format_complex(value)
    return format_float(value)


def _csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def to_csv(result):
    if isinstance(result, AuditReport):
        rows = [(rec.eq, rec.lhs, rec.rhs, rec.residual) for rec in result.records]
        return _csv(("eq", "lhs", "rhs", "residual"), rows)
    return _csv(result.header, result.rows)


def to_json(result):
    return json.dumps(result.to_dict(), indent=2) + "\n"


def render(result, fmt):
    return to_json(result) if fmt == "json" else to_csv(result)
