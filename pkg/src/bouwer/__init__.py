"""Bouwer graphs B(k, m, n): construction, cycle census, automorphisms and
half-arc-transitivity certificates."""

from .certifier import Verdict, VerdictKind, certificate_verdict, classify, predicted_verdict
from .core import BouwerGraph, GraphParams, Vertex, build_graph, is_bipartite, validate_params
from .cycles import count_six_cycles_through, enumerate_six_cycles_at, girth
from .errors import (
    BouwerError, BudgetExhausted, IntegrityViolation, InvalidParams, NotUnit, TooSmall,
    Unclassifiable, Undecided, WrongCase,
)
from .oracle import oracle_arc_reversal
from .report import Report, SweepSpec, analyze, run_sweep

__all__ = [
    "BouwerError", "BouwerGraph", "BudgetExhausted", "GraphParams", "IntegrityViolation",
    "InvalidParams", "NotUnit", "Report", "SweepSpec", "TooSmall", "Unclassifiable",
    "Undecided", "Verdict", "VerdictKind", "Vertex", "WrongCase", "analyze", "build_graph",
    "certificate_verdict", "classify", "count_six_cycles_through", "enumerate_six_cycles_at",
    "girth", "is_bipartite", "oracle_arc_reversal", "predicted_verdict", "run_sweep",
    "validate_params",
]
