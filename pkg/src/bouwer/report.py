"""Per-triple reports and parameter sweeps."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator

from .certifier import (
    VerdictKind, _Counter, classify, evidence_from_dict, evidence_to_dict,
    extension_profiles, predicted_verdict, t_set_table,
)
from .core import build_graph, is_bipartite, validate_params
from .cycles import girth
from .errors import BudgetExhausted, InvalidParams, Undecided
from .oracle import DEFAULT_BUDGET, oracle_arc_reversal

CSV_COLUMNS = ["k", "m", "n", "order", "girth", "bipartite", "verdict", "evidence",
               "predicted", "agree", "mismatch_cells", "oracle", "oracle_nodes", "ms_elapsed"]

# per-row status, mapped to the CLI exit codes
AGREE, DISAGREE, UNDECIDED, ERROR = "agree", "disagree", "undecided", "error"


@dataclass
class Report:
    k: int
    m: int
    n: int
    order: int = 0
    valency: int = 0
    simple: bool = True
    girth: int | None = None
    bipartite: bool | None = None
    buckets: dict[str, dict[int, list[int]]] = field(default_factory=dict)
    mismatch_cells: list[list[int]] = field(default_factory=list)
    verdict: str | None = None
    evidence: dict | None = None
    predicted: str | None = None
    agree: bool = False
    status: str = DISAGREE
    oracle: str = "skipped"
    oracle_nodes: int | None = None
    ms_elapsed: float | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        d = dict(d)
        d["buckets"] = {side: {int(i): list(xs) for i, xs in b.items()}
                        for side, b in d.get("buckets", {}).items()}
        if d.get("evidence") is not None:
            # validate the shape
            evidence_from_dict(d["evidence"])
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def csv_row(self) -> dict:
        cells = ";".join(f"({a},{b},{c}):{tv}/{tw}" for a, b, c, tv, tw in self.mismatch_cells)
        ev = self.evidence
        if self.error is not None:
            ev_label = f"error:{self.error}"
        elif ev is None:
            ev_label = ""
        else:
            ev_label = _evidence_label(ev)
        return {
            "k": self.k, "m": self.m, "n": self.n, "order": self.order,
            "girth": "" if self.girth is None else self.girth,
            "bipartite": _flag(self.bipartite),
            "verdict": self.verdict or "", "evidence": ev_label,
            "predicted": self.predicted or "", "agree": _flag(self.agree),
            "mismatch_cells": cells, "oracle": self.oracle,
            "oracle_nodes": "" if self.oracle_nodes is None else self.oracle_nodes,
            "ms_elapsed": "" if self.ms_elapsed is None else f"{self.ms_elapsed:.1f}",
        }


def _flag(x) -> str:
    return "" if x is None else ("yes" if x else "no")


def _evidence_label(ev: dict) -> str:
    return evidence_from_dict(ev).label


def analyze(k: int, m: int, n: int, oracle: bool = False, oracle_max_order: int = 500,
            budget: int = DEFAULT_BUDGET, timing: bool = False) -> Report:
    """Build, census and classify one triple.

    When ``oracle`` is set and the order is at most ``oracle_max_order`` the
    oracle is run as an independent cross-check; a verdict it contradicts is
    reported as a disagreement.  Validation errors propagate.
    """
    start = time.perf_counter()
    p = validate_params(k, m, n)
    g = build_graph(p, allow_multigraph=True)
    rep = Report(k, m, n, order=g.order, valency=g.valency, simple=g.is_simple)
    rep.predicted = predicted_verdict(p).value
    rep.girth = girth(g)
    rep.bipartite = is_bipartite(g)
    count = _Counter(g)
    from_v, from_w = extension_profiles(g, count)
    rep.buckets = {"from_v": {i: list(xs) for i, xs in from_v.buckets.items()},
                   "from_w": {i: list(xs) for i, xs in from_w.buckets.items()}}
    table = t_set_table(g, count)
    rep.mismatch_cells = [[*cell, tv, tw] for cell, (tv, tw) in table.mismatches()]
    run_oracle = oracle and g.order <= oracle_max_order
    contradicted = False
    try:
        verdict = classify(g, use_oracle=run_oracle, budget=budget, table=table)
    except Undecided as exc:
        rep.status = UNDECIDED
        rep.error = str(exc)
        rep.oracle = "budget"
        verdict = None
    if verdict is not None:
        rep.verdict = verdict.kind.value
        rep.evidence = evidence_to_dict(verdict.evidence)
        rep.agree = verdict.kind.value == rep.predicted
    if verdict is not None and verdict.evidence.kind.startswith("oracle"):
        # the oracle already decided the verdict
        rep.oracle = "reversible" if verdict.evidence.kind == "oracle_witness" else "irreversible"
        rep.oracle_nodes = verdict.evidence.nodes
    elif run_oracle and verdict is not None:
        try:
            result = oracle_arc_reversal(g, budget)
            rep.oracle = "reversible" if result.reversible else "irreversible"
            rep.oracle_nodes = result.nodes_explored
            oracle_kind = (VerdictKind.ARC_TRANSITIVE if result.reversible
                           else VerdictKind.HALF_ARC_TRANSITIVE)
            contradicted = oracle_kind.value != rep.verdict
        except BudgetExhausted as exc:
            rep.oracle = "budget"
            rep.oracle_nodes = exc.nodes_explored
    if verdict is not None:
        rep.status = AGREE if rep.agree and not contradicted else DISAGREE
    if timing:
        rep.ms_elapsed = round((time.perf_counter() - start) * 1000, 1)
    return rep


@dataclass(frozen=True)
class SweepSpec:
    k_range: tuple[int, int]
    m_range: tuple[int, int]
    n_range: tuple[int, int]
    max_order: int = 2000
    oracle_max_order: int = 200
    oracle: bool = True
    budget: int = DEFAULT_BUDGET

    def triples(self) -> Iterator[tuple[int, int, int]]:
        """Valid triples within ``max_order``, ordered by k, then m, then n."""
        for k in range(self.k_range[0], self.k_range[1] + 1):
            for m in range(self.m_range[0], self.m_range[1] + 1):
                for n in range(self.n_range[0], self.n_range[1] + 1):
                    try:
                        p = validate_params(k, m, n)
                    except InvalidParams:
                        continue
                    if p.order <= self.max_order:
                        yield (k, m, n)


def _row(args) -> Report:
    (k, m, n), spec, timing = args
    try:
        return analyze(k, m, n, oracle=spec.oracle, oracle_max_order=spec.oracle_max_order,
                       budget=spec.budget, timing=timing)
    except Exception as exc:  # recorded in-row; the sweep continues
        return Report(k, m, n, status=ERROR, error=f"{type(exc).__name__}: {exc}")


def run_sweep(spec: SweepSpec, jobs: int = 1, timing: bool = False) -> list[Report]:
    work = [(t, spec, timing) for t in spec.triples()]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_row, work))
    return [_row(w) for w in work]


def reports_to_csv(reports: list[Report]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        writer.writerow(rep.csv_row())
    return buf.getvalue()
