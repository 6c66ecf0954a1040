"""Template taxonomies of short walks at the zero vertex.

Three tables are materialised per parameter set:

* the 28 cases of 3-arcs starting at (0, 0),
* the 16 forms (up to reversal) of 6-cycles through (0, 0),
* the expected number of 6-cycles through each 2-arc at (0, 0) when
  m > 6 and n > 7.

Index arguments ``r, s, t`` name unit vectors and are 0-based.  The free
indices of a 3-arc case list the indices of its first two steps followed, if
the optional last-step offset ``d`` is non-zero, by the index used in ``d``.

For small m or n different templates can produce the same walk; lookups then
return the lowest id and mark the match ambiguous.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from .core import GraphParams
from .cycles import canonical_cycle
from .errors import Unclassifiable


@dataclass(frozen=True)
class ThreeArcCase:
    case_id: int
    free_indices: tuple[int, ...]
    ambiguous: bool = False
    alternatives: tuple[tuple[int, tuple[int, ...]], ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class SixCycleForm:
    form_id: int
    free_indices: tuple[int, ...]
    ambiguous: bool = False
    alternatives: tuple[tuple[int, tuple[int, ...]], ...] = field(default=(), compare=False)


class _Builder:
    """Turns symbolic vertices ``(a, {j: coefficient})`` into indices."""

    def __init__(self, p: GraphParams):
        self.p = p
        self.h = p.inv2
        self.q = p.inv2 ** 2 % p.n
        self.o = p.inv2 ** 3 % p.n
        self.idx = range(p.k - 1)

    def __call__(self, a: int, *terms: tuple[int, int]) -> int:
        b = [0] * self.p.dim
        for coef, j in terms:
            b[j] += coef
        return self.p.index(self.p.vertex(a, b))


def _three_arc_templates(p: GraphParams) -> Iterator[tuple[int, tuple[int, ...], tuple[int, int, int]]]:
    V = _Builder(p)
    h, q, o, R = V.h, V.q, V.o, V.idx

    # (1), (2)
    yield 1, (), (V(1), V(2), V(3))
    for r in R:
        yield 1, (r,), (V(1), V(2), V(3, (4, r)))
        yield 2, (r,), (V(1), V(2), V(1, (-2, r)))
    for r in R:
        x1, x2 = V(1), V(2, (2, r))
        yield 3, (r,), (x1, x2, V(3, (2, r)))
        yield 4, (r,), (x1, x2, V(1, (2, r)))
        for s in R:
            yield 3, (r, s), (x1, x2, V(3, (2, r), (4, s)))
            if s != r:
                yield 4, (r, s), (x1, x2, V(1, (2, r), (-2, s)))
        x2 = V(0, (-1, r))
        yield 5, (r,), (x1, x2, V(1, (-1, r)))
        yield 6, (r,), (x1, x2, V(-1, (-1, r)))
        for s in R:
            if s != r:
                yield 5, (r, s), (x1, x2, V(1, (-1, r), (1, s)))
            yield 6, (r, s), (x1, x2, V(-1, (-1, r), (-h, s)))
    for r in R:
        x1 = V(1, (1, r))
        x2 = V(2, (1, r))
        yield 7, (r,), (x1, x2, V(3, (1, r)))
        for s in R:
            yield 7, (r, s), (x1, x2, V(3, (1, r), (4, s)))
            yield 8, (r, s), (x1, x2, V(1, (1, r), (-2, s)))
        for s in R:
            x2 = V(2, (1, r), (2, s))
            yield 9, (r, s), (x1, x2, V(3, (1, r), (2, s)))
            yield 10, (r, s), (x1, x2, V(1, (1, r), (2, s)))
            for t in R:
                yield 9, (r, s, t), (x1, x2, V(3, (1, r), (2, s), (4, t)))
                if t != s:
                    yield 10, (r, s, t), (x1, x2, V(1, (1, r), (2, s), (-2, t)))
        x2 = V(0, (1, r))
        yield 12, (r,), (x1, x2, V(-1, (1, r)))
        for s in R:
            yield 11, (r, s), (x1, x2, V(1, (1, r), (1, s)))
            yield 12, (r, s), (x1, x2, V(-1, (1, r), (-h, s)))
        for s in R:
            if s == r:
                continue
            x2 = V(0, (1, r), (-1, s))
            yield 13, (r, s), (x1, x2, V(1, (1, r), (-1, s)))
            yield 14, (r, s), (x1, x2, V(-1, (1, r), (-1, s)))
            for t in R:
                if t != s:
                    yield 13, (r, s, t), (x1, x2, V(1, (1, r), (-1, s), (1, t)))
                yield 14, (r, s, t), (x1, x2, V(-1, (1, r), (-1, s), (-h, t)))
    x1 = V(-1)
    for r in R:
        x2 = V(0, (h, r))
        yield 15, (r,), (x1, x2, V(1, (h, r)))
        yield 16, (r,), (x1, x2, V(-1, (h, r)))
        for s in R:
            yield 15, (r, s), (x1, x2, V(1, (h, r), (1, s)))
            if s != r:
                yield 16, (r, s), (x1, x2, V(-1, (h, r), (-h, s)))
    x2 = V(-2)
    yield 18, (), (x1, x2, V(-3))
    for r in R:
        yield 17, (r,), (x1, x2, V(-1, (q, r)))
        yield 18, (r,), (x1, x2, V(-3, (-o, r)))
    for r in R:
        x2 = V(-2, (-q, r))
        yield 19, (r,), (x1, x2, V(-1, (-q, r)))
        yield 20, (r,), (x1, x2, V(-3, (-q, r)))
        for s in R:
            if s != r:
                yield 19, (r, s), (x1, x2, V(-1, (-q, r), (q, s)))
            yield 20, (r, s), (x1, x2, V(-3, (-q, r), (-o, s)))
    for r in R:
        x1 = V(-1, (-h, r))
        x2 = V(0, (-h, r))
        yield 21, (r,), (x1, x2, V(1, (-h, r)))
        for s in R:
            yield 21, (r, s), (x1, x2, V(1, (-h, r), (1, s)))
            yield 22, (r, s), (x1, x2, V(-1, (-h, r), (-h, s)))
        for s in R:
            if s == r:
                continue
            x2 = V(0, (-h, r), (h, s))
            yield 23, (r, s), (x1, x2, V(1, (-h, r), (h, s)))
            yield 24, (r, s), (x1, x2, V(-1, (-h, r), (h, s)))
            for t in R:
                yield 23, (r, s, t), (x1, x2, V(1, (-h, r), (h, s), (1, t)))
                if t != s:
                    yield 24, (r, s, t), (x1, x2, V(-1, (-h, r), (h, s), (-h, t)))
        x2 = V(-2, (-h, r))
        yield 26, (r,), (x1, x2, V(-3, (-h, r)))
        for s in R:
            yield 25, (r, s), (x1, x2, V(-1, (-h, r), (q, s)))
            yield 26, (r, s), (x1, x2, V(-3, (-h, r), (-o, s)))
        for s in R:
            x2 = V(-2, (-h, r), (-q, s))
            yield 27, (r, s), (x1, x2, V(-1, (-h, r), (-q, s)))
            yield 28, (r, s), (x1, x2, V(-3, (-h, r), (-q, s)))
            for t in R:
                if t != s:
                    yield 27, (r, s, t), (x1, x2, V(-1, (-h, r), (-q, s), (q, t)))
                yield 28, (r, s, t), (x1, x2, V(-3, (-h, r), (-q, s), (-o, t)))


# Each form: (form_id, number of distinct indices, builder of v1..v5).
def _six_cycle_templates(p: GraphParams):
    V = _Builder(p)
    h, q = V.h, V.q
    return [
        (1, 1, lambda r: (V(1), V(2, (2, r)), V(1, (2, r)), V(0, (1, r)), V(1, (1, r)))),
        (2, 1, lambda r: (V(1), V(0, (-1, r)), V(1, (-1, r)), V(2, (1, r)), V(1, (1, r)))),
        (3, 2, lambda r, s: (V(1), V(0, (-1, r)), V(1, (1, s), (-1, r)),
                             V(0, (1, s), (-1, r)), V(1, (1, s)))),
        (4, 1, lambda r: (V(1), V(0, (-1, r)), V(-1, (-1, r)), V(0, (-h, r)), V(-1, (-h, r)))),
        (5, 2, lambda r, s: (V(1, (1, r)), V(2, (2, s), (1, r)), V(1, (2, s), (-1, r)),
                             V(0, (1, s), (-1, r)), V(1, (1, s)))),
        (6, 2, lambda r, s: (V(1, (1, r)), V(0, (1, r)), V(1, (1, s), (1, r)),
                             V(0, (1, s)), V(1, (1, s)))),
        (7, 1, lambda r: (V(1, (1, r)), V(0, (1, r)), V(-1, (h, r)), V(0, (h, r)), V(-1))),
        (8, 3, lambda r, s, t: (V(1, (1, r)), V(0, (1, r), (-1, s)),
                                V(1, (1, r), (-1, s), (1, t)), V(0, (1, t), (-1, s)),
                                V(1, (1, t)))),
        (9, 2, lambda r, s: (V(1, (1, r)), V(0, (1, r), (-1, s)), V(-1, (h, r), (-1, s)),
                             V(0, (h, r), (-h, s)), V(-1, (-h, s)))),
        (10, 1, lambda r: (V(-1), V(0, (h, r)), V(1, (h, r)), V(0, (-h, r)), V(-1, (-h, r)))),
        (11, 2, lambda r, s: (V(-1), V(0, (h, r)), V(-1, (h, r), (-h, s)),
                              V(0, (h, r), (-h, s)), V(-1, (-h, s)))),
        (12, 1, lambda r: (V(-1), V(-2, (-q, r)), V(-1, (-q, r)), V(-2, (-h, r)),
                           V(-1, (-h, r)))),
        (13, 2, lambda r, s: (V(-1, (-h, r)), V(0, (-h, r)), V(-1, (-h, r), (-h, s)),
                              V(0, (-h, s)), V(-1, (-h, s)))),
        (14, 2, lambda r, s: (V(-1, (-h, r)), V(0, (-h, r), (h, s)), V(1, (h, r), (h, s)),
                              V(0, (h, r), (-h, s)), V(-1, (-h, s)))),
        (15, 3, lambda r, s, t: (V(-1, (-h, r)), V(0, (-h, r), (h, s)),
                                 V(-1, (-h, r), (h, s), (-h, t)), V(0, (h, s), (-h, t)),
                                 V(-1, (-h, t)))),
        (16, 2, lambda r, s: (V(-1, (-h, r)), V(-2, (-h, r), (-q, s)), V(-1, (-q, r), (-q, s)),
                              V(-2, (-q, r), (-h, s)), V(-1, (-h, s)))),
    ]


@lru_cache(maxsize=64)
def three_arc_table(p: GraphParams) -> dict[tuple[int, int, int, int], tuple[tuple[int, tuple[int, ...]], ...]]:
    """Map each templated 3-arc (as an index 4-tuple) to its matching cases."""
    table = defaultdict(list)
    for case_id, free, (x1, x2, x3) in _three_arc_templates(p):
        table[(p.origin, x1, x2, x3)].append((case_id, free))
    return {arc: tuple(sorted(set(v))) for arc, v in table.items()}


@lru_cache(maxsize=64)
def six_cycle_table(p: GraphParams) -> dict[tuple[int, ...], tuple[tuple[int, tuple[int, ...]], ...]]:
    """Map canonical 6-cycles through the origin to their matching forms.

    A cycle reached by two index assignments of the same form (the forms
    that are their own reversal) is recorded once, with the least assignment.
    """
    table = defaultdict(dict)
    for form_id, arity, build in _six_cycle_templates(p):
        for idx in permutations(range(p.k - 1), arity):
            cycle = (p.origin,) + build(*idx)
            if len(set(cycle)) != 6:
                continue
            key = canonical_cycle(cycle)
            prev = table[key].get(form_id)
            if prev is None or idx < prev:
                table[key][form_id] = idx
    return {key: tuple(sorted(forms.items())) for key, forms in table.items()}


def classify_three_arc(p: GraphParams, arc: Sequence[int]) -> ThreeArcCase:
    """Template case of a 3-arc starting at (0, 0)."""
    matches = three_arc_table(p).get(tuple(arc))
    if not matches:
        raise Unclassifiable(f"3-arc {tuple(arc)} matches no case")
    case_id, free = matches[0]
    return ThreeArcCase(case_id, free, len({c for c, _ in matches}) > 1, matches)


def match_six_cycle_form(p: GraphParams, cycle: Sequence[int]) -> SixCycleForm:
    """Form of a 6-cycle through (0, 0); either orientation is accepted."""
    matches = six_cycle_table(p).get(canonical_cycle(cycle))
    if not matches:
        raise Unclassifiable(f"6-cycle {tuple(cycle)} matches no form")
    form_id, free = matches[0]
    return SixCycleForm(form_id, free, len(matches) > 1, matches)


def three_arc_case_counts_formula(k: int) -> dict[int, int]:
    """Number of 3-arcs per case in the generic range m > 6, n > 7."""
    out = {}
    for size, cases in [
        (k, (1, 18)), (k - 1, (2, 17)),
        (k * (k - 1), (3, 6, 7, 12, 15, 20, 21, 26)),
        ((k - 1) ** 2, (4, 5, 8, 11, 16, 19, 22, 25)),
        (k * (k - 1) ** 2, (9, 28)), ((k - 1) ** 3, (10, 27)),
        ((k - 1) ** 2 * (k - 2), (13, 24)), (k * (k - 1) * (k - 2), (14, 23)),
    ]:
        for c in cases:
            out[c] = size
    return dict(sorted(out.items()))


def three_arc_census(graph) -> Counter:
    """Per-case count of the 3-arcs at (0, 0); unmatched arcs count under 0."""
    from .cycles import enumerate_s_arcs

    table = three_arc_table(graph.params)
    tally = Counter()
    for arc in enumerate_s_arcs(graph, graph.params.origin, 3):
        matches = table.get(arc)
        tally[matches[0][0] if matches else 0] += 1
    return tally


def six_cycle_form_census(graph) -> Counter:
    """Per-form count of the 6-cycles through (0, 0); unmatched under 0."""
    from .cycles import enumerate_six_cycles_at

    table = six_cycle_table(graph.params)
    tally = Counter()
    for cycle in enumerate_six_cycles_at(graph, graph.params.origin):
        matches = table.get(cycle)
        tally[matches[0][0] if matches else 0] += 1
    return tally


def six_cycles_at_origin_formula(k: int) -> int:
    """Total 6-cycles through a vertex when m > 6 and n > 7."""
    return (k - 1) * k * (k + 1)


@lru_cache(maxsize=64)
def two_arc_count_table(p: GraphParams) -> dict[tuple[int, int, int], tuple[int, str]]:
    """Expected 6-cycle count and a label for every 2-arc at (0, 0).

    Only meaningful for m > 6 and n > 7.  Labels name the template.
    """
    V = _Builder(p)
    h, q, k, R = V.h, V.q, p.k, V.idx
    o = p.origin
    table: dict[tuple[int, int, int], tuple[int, str]] = {}

    def put(x1, x2, count, label):
        arc = (o, x1, x2)
        if arc in table:
            raise ValueError(f"2-arc template collision at {arc}: {label} vs {table[arc][1]}")
        table[arc] = (count, label)

    put(V(1), V(2), 0, "(1,0)->(2,0)")
    put(V(-1), V(-2), 0, "(-1,0)->(-2,0)")
    for r in R:
        put(V(1, (1, r)), V(2, (3, r)), 0, "(1,e_r)->(2,3e_r)")
        put(V(-1, (-h, r)), V(-2, (-h - q, r)), 0, "(-1,-e_r/2)->(-2,-3e_r/4)")
        put(V(1), V(2, (2, r)), 1, "(1,0)->(2,2e_r)")
        put(V(1, (1, r)), V(2, (1, r)), 1, "(1,e_r)->(2,e_r)")
        put(V(-1), V(-2, (-q, r)), 1, "(-1,0)->(-2,-e_r/4)")
        put(V(-1, (-h, r)), V(-2, (-h, r)), 1, "(-1,-e_r/2)->(-2,-e_r/2)")
        put(V(1), V(0, (-1, r)), k, "(1,0)->(0,-e_r)")
        put(V(1, (1, r)), V(0, (1, r)), k, "(1,e_r)->(0,e_r)")
        put(V(-1), V(0, (h, r)), k, "(-1,0)->(0,e_r/2)")
        put(V(-1, (-h, r)), V(0, (-h, r)), k, "(-1,-e_r/2)->(0,-e_r/2)")
        for s in R:
            if s == r:
                continue
            put(V(1, (1, r)), V(2, (1, r), (2, s)), 1, "(1,e_r)->(2,e_r+2e_s)")
            put(V(-1, (-h, r)), V(-2, (-h, r), (-q, s)), 1, "(-1,-e_r/2)->(-2,-e_r/2-e_s/4)")
            put(V(1, (1, r)), V(0, (1, r), (-1, s)), k, "(1,e_r)->(0,e_r-e_s)")
            put(V(-1, (-h, r)), V(0, (-h, r), (h, s)), k, "(-1,-e_r/2)->(0,-e_r/2+e_s/2)")
    return table
