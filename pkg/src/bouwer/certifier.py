"""Cycle-count certificates that no automorphism reverses the arc v -> w,
with v = (0, 0) and w = (1, 0).

For each extension ``x`` of the 2-arc ``v - w - x`` (and ``x'`` of
``w - v - x'``) we count the 6-cycles through it.  An arc-reversing
automorphism would have to swap the two families bucket by bucket, and hence
swap the sets of 2-arcs harvested from the 6-cycles through {v, w}.  The
T-table records those sets' sizes; any unequal cell rules reversal out.

Cells are keyed ``(i1, i2, j)``.  On the v side a 6-cycle
``v - w - x - y - z - u - v`` with ``x`` in bucket i1 (from v) and ``u`` in
bucket i2 (from w) contributes the 2-arc ``v - u - z``, and j is the number of
6-cycles through that 2-arc.  The w side is the same with the roles of v and
w exchanged.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum

from .core import BouwerGraph, GraphParams
from .cycles import count_six_cycles_through, six_cycles_through_edge
from .errors import BudgetExhausted, Undecided
from .oracle import DEFAULT_BUDGET, oracle_arc_reversal
from .symmetry import explicit_reversal, swaps_arc, verify_automorphism


class VerdictKind(str, Enum):
    ARC_TRANSITIVE = "ArcTransitive"
    HALF_ARC_TRANSITIVE = "HalfArcTransitive"


Cell = tuple[int, int, int]


@dataclass(frozen=True)
class ExtensionProfile:
    direction: str
    buckets: dict[int, tuple[int, ...]]

    def bucket_of(self, x: int) -> int:
        for i, members in self.buckets.items():
            if x in members:
                return i
        raise KeyError(x)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.buckets))


@dataclass(frozen=True)
class TSetTable:
    t_v: dict[Cell, frozenset[tuple[int, int, int]]]
    t_w: dict[Cell, frozenset[tuple[int, int, int]]]

    @property
    def cells(self) -> list[Cell]:
        return sorted(set(self.t_v) | set(self.t_w))

    def sizes(self, cell: Cell) -> tuple[int, int]:
        return (len(self.t_v.get(cell, ())), len(self.t_w.get(cell, ())))

    @property
    def entries(self) -> dict[Cell, tuple[int, int]]:
        return {c: self.sizes(c) for c in self.cells}

    def mismatches(self) -> list[tuple[Cell, tuple[int, int]]]:
        return [(c, s) for c, s in self.entries.items() if s[0] != s[1]]


@dataclass(frozen=True)
class ExplicitMap:
    name: str
    kind: str = field(default="explicit", init=False)

    @property
    def label(self) -> str:
        return f"explicit:{self.name}"


@dataclass(frozen=True)
class CertificateMismatch:
    cell: Cell
    t_v: int
    t_w: int
    kind: str = field(default="certificate", init=False)

    @property
    def label(self) -> str:
        i1, i2, j = self.cell
        return f"certificate:({i1},{i2},{j}):{self.t_v}/{self.t_w}"


@dataclass(frozen=True)
class OracleWitness:
    nodes: int
    kind: str = field(default="oracle_witness", init=False)

    @property
    def label(self) -> str:
        return "oracle:witness"


@dataclass(frozen=True)
class OracleExhaustive:
    nodes: int
    kind: str = field(default="oracle_exhaustive", init=False)

    @property
    def label(self) -> str:
        return "oracle:exhaustive"


@dataclass(frozen=True)
class Prediction:
    kind: str = field(default="prediction", init=False)

    @property
    def label(self) -> str:
        return "prediction"


Evidence = ExplicitMap | CertificateMismatch | OracleWitness | OracleExhaustive | Prediction


def evidence_to_dict(ev: Evidence) -> dict:
    d = {"kind": ev.kind}
    if isinstance(ev, ExplicitMap):
        d["name"] = ev.name
    elif isinstance(ev, CertificateMismatch):
        d.update(cell=list(ev.cell), t_v=ev.t_v, t_w=ev.t_w)
    elif isinstance(ev, (OracleWitness, OracleExhaustive)):
        d["nodes"] = ev.nodes
    return d


def evidence_from_dict(d: dict) -> Evidence:
    kind = d["kind"]
    if kind == "explicit":
        return ExplicitMap(d["name"])
    if kind == "certificate":
        return CertificateMismatch(tuple(d["cell"]), d["t_v"], d["t_w"])
    if kind == "oracle_witness":
        return OracleWitness(d["nodes"])
    if kind == "oracle_exhaustive":
        return OracleExhaustive(d["nodes"])
    if kind == "prediction":
        return Prediction()
    raise ValueError(f"unknown evidence kind {kind!r}")


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    evidence: Evidence

    def __post_init__(self):
        if isinstance(self.evidence, CertificateMismatch) and self.kind != VerdictKind.HALF_ARC_TRANSITIVE:
            raise ValueError("a certificate mismatch implies half-arc-transitivity")
        if isinstance(self.evidence, ExplicitMap) and self.kind != VerdictKind.ARC_TRANSITIVE:
            raise ValueError("an explicit reversing map implies arc-transitivity")

    @property
    def prediction_only(self) -> bool:
        return isinstance(self.evidence, Prediction)


class _Counter:
    """Memoised 6-cycle counts of 2-arcs in one graph."""

    def __init__(self, graph: BouwerGraph):
        self.graph = graph
        self.cache: dict[tuple[int, int, int], int] = {}

    def __call__(self, arc: tuple[int, int, int]) -> int:
        n = self.cache.get(arc)
        if n is None:
            n = self.cache[arc] = count_six_cycles_through(self.graph, arc)
        return n


def _profile(graph: BouwerGraph, count, first: int, second: int, direction: str) -> ExtensionProfile:
    buckets = defaultdict(list)
    for x in graph.simple_adjacency[second]:
        if x != first:
            buckets[count((first, second, x))].append(x)
    return ExtensionProfile(direction, {i: tuple(sorted(xs)) for i, xs in sorted(buckets.items())})


def extension_profiles(graph: BouwerGraph, count=None) -> tuple[ExtensionProfile, ExtensionProfile]:
    """Bucket the extensions of v -> w (``from_v``) and of w -> v (``from_w``)."""
    count = count or _Counter(graph)
    v, w = graph.params.origin, graph.params.one
    return (_profile(graph, count, v, w, "from_v"), _profile(graph, count, w, v, "from_w"))


def t_set_table(graph: BouwerGraph, count=None) -> TSetTable:
    count = count or _Counter(graph)
    v, w = graph.params.origin, graph.params.one
    from_v, from_w = extension_profiles(graph, count)
    bucket_v = {x: i for i, xs in from_v.buckets.items() for x in xs}
    bucket_w = {x: i for i, xs in from_w.buckets.items() for x in xs}
    t_v = defaultdict(set)
    t_w = defaultdict(set)
    for x, y, z, u in six_cycles_through_edge(graph, v, w):
        i1, i2 = bucket_v[x], bucket_w[u]
        arc = (v, u, z)
        t_v[(i1, i2, count(arc))].add(arc)
        # seen from w the same cycle is w - v - u - z - y - x - w
        arc = (w, x, y)
        t_w[(i2, i1, count(arc))].add(arc)
    return TSetTable({c: frozenset(s) for c, s in t_v.items()},
                     {c: frozenset(s) for c, s in t_w.items()})


def _evidence_rank(item):
    (i1, i2, j), (tv, tw) = item
    return (i1 != i2, min(tv, tw) != 0, -i1, j)


def certificate_verdict(graph: BouwerGraph, table: TSetTable | None = None) -> Verdict | None:
    """Half-arc-transitive verdict if the T-table is unbalanced, else None.

    When several cells disagree the reported one prefers diagonal cells with
    an empty side.
    """
    table = table or t_set_table(graph)
    bad = table.mismatches()
    if not bad:
        return None
    cell, (tv, tw) = min(bad, key=_evidence_rank)
    return Verdict(VerdictKind.HALF_ARC_TRANSITIVE, CertificateMismatch(cell, tv, tw))


ARC_TRANSITIVE_TRIPLES = {(2, 3, 7), (2, 6, 7), (2, 6, 21)}


def predicted_verdict(params: GraphParams) -> VerdictKind:
    k, m, n = params.triple
    if n == 3 or (k, n) == (2, 5) or (k, m, n) in ARC_TRANSITIVE_TRIPLES:
        return VerdictKind.ARC_TRANSITIVE
    return VerdictKind.HALF_ARC_TRANSITIVE


def classify(graph: BouwerGraph, use_oracle: bool = False, budget: int = DEFAULT_BUDGET,
             table: TSetTable | None = None) -> Verdict:
    """Explicit map, then certificate, then (optionally) the oracle.

    Without the oracle an undecided graph gets the predicted kind with
    ``Prediction`` evidence.
    """
    p = graph.params
    vmap = explicit_reversal(p)
    if vmap is not None and verify_automorphism(graph, vmap) and swaps_arc(vmap, p.origin, p.one):
        return Verdict(VerdictKind.ARC_TRANSITIVE, ExplicitMap(vmap.name))
    verdict = certificate_verdict(graph, table)
    if verdict is not None:
        return verdict
    if use_oracle:
        try:
            result = oracle_arc_reversal(graph, budget)
        except BudgetExhausted as exc:
            raise Undecided(f"B{p.triple}: certificate balanced and {exc}") from exc
        if result.reversible:
            return Verdict(VerdictKind.ARC_TRANSITIVE, OracleWitness(result.nodes_explored))
        return Verdict(VerdictKind.HALF_ARC_TRANSITIVE, OracleExhaustive(result.nodes_explored))
    return Verdict(predicted_verdict(p), Prediction())
