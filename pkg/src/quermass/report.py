"""Check outcomes and their flat CSV / JSON serialization.

Every inequality or identity check produces one Report row.  The CSV column
order is fixed so diffs and plots stay trivial.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

CSV_COLUMNS = [
    "check", "n", "i", "k", "alpha", "gamma", "beta", "lambda_or_s_t",
    "lhs", "rhs", "margin", "satisfied", "route", "seed",
]


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            return "nan"
        return repr(x)
    return str(x)


@dataclass
class Report:
    """One checked statement: lhs versus rhs at a stated tolerance.

    mode 'ge'   : satisfied iff lhs >= rhs - tol
    mode 'eq'   : satisfied iff |lhs - rhs| <= tol
    mode 'band' : satisfied iff |lhs - rhs| <= nsigma * extra['sigma']
    """

    check: str
    lhs: float
    rhs: float
    tol: float = 1e-9
    route: str = "exact"
    mode: str = "ge"
    params: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)
    witness: object = None

    @property
    def margin(self) -> float:
        if math.isinf(self.lhs) and math.isinf(self.rhs) and self.lhs == self.rhs:
            return 0.0
        return self.lhs - self.rhs

    @property
    def satisfied(self) -> bool:
        if self.mode == "ge":
            return self.margin >= -self.tol
        if self.mode == "eq":
            return abs(self.margin) <= self.tol
        if self.mode == "band":
            nsigma = self.extra.get("nsigma", 3.0)
            return abs(self.margin) <= nsigma * self.extra["sigma"] + self.tol
        raise ValueError(f"unknown mode {self.mode!r}")

    def row(self) -> dict:
        r = {c: "" for c in CSV_COLUMNS}
        r["check"] = self.check
        for key in ("n", "i", "k", "alpha", "gamma", "beta", "lambda_or_s_t", "seed"):
            if key in self.params:
                r[key] = _fmt(self.params[key])
        r["lhs"] = _fmt(self.lhs)
        r["rhs"] = _fmt(self.rhs)
        r["margin"] = _fmt(self.margin)
        r["satisfied"] = _fmt(self.satisfied)
        r["route"] = self.route
        return r

    def describe(self) -> str:
        flag = "ok " if self.satisfied else "VIOLATION"
        return (f"{flag} {self.check}: lhs={_fmt(self.lhs)} rhs={_fmt(self.rhs)} "
                f"margin={_fmt(self.margin)} [{self.route}]")


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        writer.writerow(rep.row())
    return buf.getvalue()


def reports_to_json(reports) -> str:
    rows = [rep.row() for rep in reports]
    return json.dumps(rows, indent=2, sort_keys=True) + "\n"
