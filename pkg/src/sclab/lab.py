"""Grid sweeps comparing measured complexities of witness languages against the formulas."""
from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

from .atoms import atom_formula, atoms, syntactic_semigroup_size
from .formulas import FORMULAS, formula
from .ops import BoolOp, boolean_op, concat, reverse, star
from .witnesses import WITNESS_DIALECTS, witness, witness_pair

# dialect of U_n used by each unary row
UNARY_DIALECTS = {
    "star": "a,b",
    "reverse": "a,b,c",
    "semigroup": "a,b,c",
    "atom-count": "a,b,c",
}

DEFAULT_RANGES = {
    "union": (range(3, 7), range(3, 7)),
    "symdiff": (range(3, 7), range(3, 7)),
    "difference": (range(3, 7), range(3, 7)),
    "intersection": (range(3, 7), range(3, 7)),
    "product": (range(3, 6), range(3, 6)),
    "star": (None, range(3, 9)),
    "reverse": (None, range(3, 9)),
    "semigroup": (None, range(3, 7)),
    "atom-count": (None, range(3, 5)),
    "same-alphabet-union": (range(3, 7), range(3, 7)),
    "same-alphabet-symdiff": (range(3, 7), range(3, 7)),
    "same-alphabet-difference": (range(3, 7), range(3, 7)),
    "same-alphabet-intersection": (range(3, 7), range(3, 7)),
    "same-alphabet-product": (range(3, 6), range(3, 6)),
}

ALL_OPS = tuple(DEFAULT_RANGES)


@dataclass(frozen=True)
class ComplexityRecord:
    op: str
    m: Optional[int]
    n: int
    measured: int
    formula: int
    match: bool
    witness_desc: str
    elapsed: Optional[float] = None

    def as_dict(self, timing=True) -> dict:
        d = asdict(self)
        if not timing:
            del d["elapsed"]
        return d


def measure(op: str, m: Optional[int], n: int, budget: Optional[int] = None):
    """Return ``(measured κ, witness description)`` for one grid cell."""
    if FORMULAS[op].unary:
        pi = UNARY_DIALECTS[op]
        d = witness(n, pi)
        desc = f"L_n({pi})"
        if op == "star":
            return star(d, budget).n, desc
        if op == "reverse":
            return reverse(d, budget).n, desc
        if op == "semigroup":
            return syntactic_semigroup_size(d, budget), desc
        return sum(a.nonempty for a in atoms(d, budget)), desc
    left, right = witness_pair(op, m, n)
    pl, pr = WITNESS_DIALECTS[op]
    base = op.replace("same-alphabet-", "")
    sym = {"union": "∪", "symdiff": "⊕", "difference": "∖", "intersection": "∩", "product": "·"}[base]
    desc = f"L'_m({pl}) {sym} L_n({pr})"
    if base == "product":
        return concat(left, right, budget).n, desc
    return boolean_op(left, right, BoolOp(base)).n, desc


def run_cell(op: str, m: Optional[int], n: int, budget: Optional[int] = None) -> ComplexityRecord:
    start = time.perf_counter()
    measured, desc = measure(op, m, n, budget)
    elapsed = time.perf_counter() - start
    expected = formula(op, m, n)
    return ComplexityRecord(op, m, n, measured, expected, measured == expected, desc, elapsed)


def grid(ops, m_range=None, n_range=None) -> list:
    """Cells as (op, m, n), ordered by op (as given), then m, then n.  Unary ops ignore m."""
    cells = []
    for op in ops:
        if op not in FORMULAS:
            raise KeyError(op)
        dm, dn = DEFAULT_RANGES[op]
        ns = list(n_range if n_range is not None else dn)
        if FORMULAS[op].unary:
            cells += [(op, None, n) for n in ns]
        else:
            ms = list(m_range if m_range is not None else dm)
            cells += [(op, m, n) for m in ms for n in ns]
    return cells


def _run_star(args):
    return run_cell(*args)


def run_grid(cells, budget: Optional[int] = None, jobs: int = 1) -> list:
    args = [(op, m, n, budget) for op, m, n in cells]
    if jobs <= 1:
        return [run_cell(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps input order, so the report order does not depend on completion order
        return list(pool.map(_run_star, args))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def _md_table(header, rows) -> str:
    out = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    for row in rows:
        out.append("| " + " | ".join("" if v is None else str(v) for v in row) + " |")
    return "\n".join(out) + "\n"


def _csv_table(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def render_records(records, fmt: str, timing: bool = True) -> str:
    if fmt == "json":
        body = {
            "all_match": all(r.match for r in records),
            "records": [r.as_dict(timing) for r in records],
        }
        return json.dumps(body, indent=2, ensure_ascii=False) + "\n"
    header = ["op", "m", "n", "measured", "formula", "match", "witness"]
    if timing:
        header.append("elapsed_s")
    rows = []
    for r in records:
        row = [r.op, r.m, r.n, r.measured, r.formula, "yes" if r.match else "NO", r.witness_desc]
        if timing:
            row.append(f"{r.elapsed:.4f}")
        rows.append(row)
    if fmt == "md":
        return _md_table(header, rows)
    if fmt == "csv":
        return _csv_table(header, rows)
    raise ValueError(f"unsupported report format {fmt!r}")


def atom_report(n: int, pi: str = "a,b,c", budget: Optional[int] = None) -> dict:
    """Nonempty atoms of L_n(pi) with measured and formula complexities."""
    profiles = atoms(witness(n, pi), budget)
    rows = []
    for p in profiles:
        if not p.nonempty:
            continue
        f = atom_formula(n, len(p.S))
        rows.append({"S": sorted(p.S), "kappa": p.measured_kappa, "formula": f, "match": p.measured_kappa == f})
    return {"n": n, "atoms": rows}


def atom_report_ok(report: dict) -> bool:
    n = report["n"]
    return len(report["atoms"]) == 2**n and all(r["match"] for r in report["atoms"])


def render_atoms(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    header = ["S", "kappa", "formula", "match"]
    rows = [
        ["{" + ",".join(map(str, r["S"])) + "}", r["kappa"], r["formula"], "yes" if r["match"] else "NO"]
        for r in report["atoms"]
    ]
    if fmt == "md":
        return _md_table(header, rows)
    if fmt == "csv":
        return _csv_table(header, rows)
    raise ValueError(f"unsupported report format {fmt!r}")
