"""Suite reports and the dimension table, with text / JSON / CSV renderers."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field

from .catalog import generator_count_identity
from .johnson import abelianization_dim, lemma43_bound, lemma43_rank
from .suites import FAIL, SUITES, Budget, Check, suite_rng
from .tensor import even_sym3_dim_formula, invariant_bases, sym2_dim_formula, sym3_dim_formula

SCHEMA_VERSION = 1


@dataclass
class Report:
    genus: int
    suite: str
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0
    skipped: str = ""

    @property
    def status(self) -> str:
        statuses = {c.status for c in self.checks}
        for s in ("FAIL", "FINDING", "PASS"):
            if s in statuses:
                return s
        return "SKIP"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(
            genus=d["genus"],
            suite=d["suite"],
            checks=[Check(**c) for c in d["checks"]],
            wall_time=d["wall_time"],
            skipped=d.get("skipped", ""),
        )


def run_suite(name: str, g: int, seed: int, budget: Budget | None = None) -> Report:
    min_genus, fn = SUITES[name]
    if g < min_genus:
        return Report(g, name, skipped=f"needs genus >= {min_genus}")
    start = time.perf_counter()
    checks = fn(g, suite_rng(seed, g, name), budget or Budget())
    return Report(g, name, checks, time.perf_counter() - start)


def any_failed(reports: list[Report]) -> bool:
    return any(c.status == FAIL for r in reports for c in r.checks)


def reports_to_json(reports: list[Report], seed: int) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "seed": seed,
        "ok": not any_failed(reports),
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def reports_from_json(text: str) -> list[Report]:
    return [Report.from_dict(d) for d in json.loads(text)["reports"]]


def _payload_text(payload: dict) -> str:
    return " ".join(f"{k}={json.dumps(v, sort_keys=True)}" for k, v in sorted(payload.items()))


def reports_to_text(reports: list[Report]) -> str:
    lines = []
    for r in reports:
        if r.skipped:
            lines.append(f"g={r.genus} {r.suite}: SKIP ({r.skipped})")
            continue
        lines.append(f"g={r.genus} {r.suite}: {r.status} [{r.wall_time:.3f}s]")
        for c in r.checks:
            lines.append(f"  {c.status:<7} {c.name} {_payload_text(c.payload)}".rstrip())
    return "\n".join(lines)


def reports_to_csv(reports: list[Report]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["genus", "suite", "check", "status", "payload", "wall_time"])
    for r in reports:
        if r.skipped:
            w.writerow([r.genus, r.suite, "", "SKIP", json.dumps({"reason": r.skipped}), 0.0])
        for c in r.checks:
            w.writerow([r.genus, r.suite, c.name, c.status, json.dumps(c.payload, sort_keys=True), f"{r.wall_time:.6f}"])
    return buf.getvalue()


# -- dimension table ---------------------------------------------------------------

DIMS_COLUMNS = [
    "g",
    "abelianization",
    "lemma43_formula",
    "lemma43_computed",
    "sym2_formula",
    "sym2_computed",
    "sym3_formula",
    "sym3_computed",
    "even_sym3_formula",
    "even_sym3_computed",
    "generator_count",
    "mismatch",
]


def dims_row(g: int) -> dict:
    """Formula and computed dimensions side by side; ``None`` where the genus is too small."""
    if g < 3:
        raise ValueError(f"dims rows need genus >= 3, got {g}")
    b = invariant_bases(g)
    row = {
        "g": g,
        "abelianization": None,
        "lemma43_formula": None,
        "lemma43_computed": None,
        "sym2_formula": sym2_dim_formula(g),
        "sym2_computed": b.sym2.dim,
        "sym3_formula": sym3_dim_formula(g),
        "sym3_computed": b.sym3.dim,
        "even_sym3_formula": even_sym3_dim_formula(g),
        "even_sym3_computed": b.even_sym3.dim,
        "generator_count": None,
    }
    if g >= 4:
        row["abelianization"] = abelianization_dim(g)
        row["lemma43_formula"] = lemma43_bound(g)
        row["lemma43_computed"] = lemma43_rank(g)
        row["generator_count"] = generator_count_identity(g).count
    mismatch = [
        name
        for name in ("lemma43", "sym2", "sym3", "even_sym3")
        if row[f"{name}_formula"] != row[f"{name}_computed"]
    ]
    if row["generator_count"] is not None and row["generator_count"] != row["abelianization"]:
        mismatch.append("generator_count")
    row["mismatch"] = mismatch
    return row


def dims_to_text(rows: list[dict]) -> str:
    header = DIMS_COLUMNS
    cells = [[_cell(r[c]) for c in header] for r in rows]
    widths = [max(len(h), *(len(c[k]) for c in cells)) for k, h in enumerate(header)]
    out = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for c in cells:
        out.append("  ".join(x.rjust(w) for x, w in zip(c, widths)))
    return "\n".join(out)


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, list):
        return ",".join(v) if v else "ok"
    return str(v)


def dims_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(DIMS_COLUMNS)
    for r in rows:
        w.writerow(["" if r[c] is None else (";".join(r[c]) if isinstance(r[c], list) else r[c]) for c in DIMS_COLUMNS])
    return buf.getvalue()


def dims_to_json(rows: list[dict]) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, "rows": rows}, indent=2, sort_keys=True)
