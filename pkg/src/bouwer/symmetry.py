"""Explicit automorphisms of B(k, m, n) and the arc-reversing maps.

Every map is materialised as a permutation of canonical indices so that a
single routine verifies them all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .core import BouwerGraph, GraphParams, Transport, Vertex
from .errors import WrongCase


@dataclass(frozen=True)
class VertexMap:
    name: str
    image: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __len__(self) -> int:
        return len(self.image)

    def then(self, other: "VertexMap") -> "VertexMap":
        """``other`` applied after ``self``."""
        return VertexMap(f"{other.name}*{self.name}",
                         tuple(other.image[j] for j in self.image))

    def power(self, e: int) -> "VertexMap":
        result = identity_map(len(self.image))
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            result = result.then(base)
        return VertexMap(f"{self.name}^{e}", result.image)

    def inverse(self) -> "VertexMap":
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return VertexMap(f"{self.name}^-1", tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def is_bijective(self) -> bool:
        return sorted(self.image) == list(range(len(self.image)))


def identity_map(order: int) -> VertexMap:
    return VertexMap("id", tuple(range(order)))


def from_rule(params: GraphParams, name: str, rule: Callable[[Vertex], Vertex | tuple]) -> VertexMap:
    """Materialise a closed-form vertex rule as an index permutation."""
    return VertexMap(name, tuple(params.index(params.vertex(*rule(params.from_index(i))))
                                 for i in range(params.order)))


def theta(params: GraphParams) -> VertexMap:
    """Cyclic shift of the b-coordinates: (a, b2, ..., bk) -> (a, b3, ..., bk, b2)."""
    return from_rule(params, "theta", lambda v: (v.a, v.b[1:] + v.b[:1]))


def tau(params: GraphParams) -> VertexMap:
    """(a, b) -> (a + 1, 2b)."""
    return from_rule(params, "tau", lambda v: (v.a + 1, tuple(2 * x for x in v.b)))


def psi(params: GraphParams) -> VertexMap:
    """Replace b2 by 2**a - 1 - (b2 + ... + bk)."""
    p = params

    def rule(v):
        return (v.a, (p.pow2[v.a] - 1 - sum(v.b),) + v.b[1:])

    return from_rule(params, "psi", rule)


def translation(params: GraphParams, c: Iterable[int]) -> VertexMap:
    c = tuple(c)
    return from_rule(params, f"shift{c}",
                     lambda v: (v.a, tuple(x + y for x, y in zip(v.b, c))))


def transport_map(transport: Transport) -> VertexMap:
    return from_rule(transport.params, "transport", transport)


def verify_automorphism(graph: BouwerGraph, vmap: VertexMap) -> bool:
    """True iff ``vmap`` is a bijection preserving adjacency with multiplicity."""
    if len(vmap.image) != graph.order or not vmap.is_bijective():
        return False
    img = vmap.image
    adj = graph.adjacency
    return all(sorted(img[w] for w in adj[u]) == list(adj[img[u]])
               for u in range(graph.order))


def swaps_arc(vmap: VertexMap, u: int, v: int) -> bool:
    return vmap.image[u] == v and vmap.image[v] == u


def neighbor_orbits(graph: BouwerGraph, maps: Iterable[VertexMap], centre: int = 0) -> list[list[int]]:
    """Orbits of the group generated by ``maps`` on the neighbours of
    ``centre`` (every map must fix ``centre``)."""
    maps = list(maps)
    todo = sorted(set(graph.adjacency[centre]))
    seen: set[int] = set()
    orbits = []
    for start in todo:
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for g in maps:
                y = g.image[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def reversal_map_n3(params: GraphParams) -> VertexMap:
    """(a, b) -> (1 - a, -b), defined when n = 3."""
    if params.n != 3:
        raise WrongCase(f"n must be 3, got {params.n}")
    return from_rule(params, "n3", lambda v: (1 - v.a, tuple(-x for x in v.b)))


def reversal_map_k2n5(params: GraphParams) -> VertexMap:
    """(a, b) -> (1 - a, -b) for a = 0, 1 mod 4 and (1 - a, 2 - b) otherwise."""
    if params.k != 2 or params.n != 5 or params.m % 4:
        raise WrongCase(f"need k = 2, n = 5, 4 | m; got {params.triple}")

    def rule(v):
        c = 0 if v.a % 4 in (0, 1) else 2
        return (1 - v.a, (c - v.b[0],))

    return from_rule(params, "k2n5", rule)


# b -> (sign of a, offset, new b): (a, b) is sent to (sign * a + offset, new b).
# The uncorrected table has -a, 1 - a and 1 - a in rows 3, 5 and 6; that map is
# not an automorphism of B(2, 3, 7) or B(2, 6, 7).  -1 - a in all three rows
# is the only choice of signs, offsets and targets on those rows that is.
B2M7_UNCORRECTED = {
    0: (-1, 1, 0), 1: (1, 1, 2), 2: (1, -1, 1), 3: (-1, 0, 6),
    4: (1, 3, 4), 5: (-1, 1, 5), 6: (-1, 1, 3),
}
_B2M7 = {**B2M7_UNCORRECTED, 3: (-1, -1, 6), 5: (-1, -1, 5), 6: (-1, -1, 3)}

_B2621 = {
    0: (-1, 1, 0), 1: (1, 1, 2), 2: (1, -1, 1),
    3: (-1, 5, 6), 4: (1, 3, 11), 5: (-1, 5, 19),
    6: (-1, 5, 3), 7: (-1, 1, 14), 8: (1, 1, 16),
    9: (1, -1, 15), 10: (-1, 5, 20), 11: (1, 3, 4),
    12: (-1, 5, 12), 13: (-1, 5, 17), 14: (-1, 1, 7),
    15: (1, 1, 9), 16: (1, -1, 8), 17: (-1, 5, 13),
    18: (1, 3, 18), 19: (-1, 5, 5), 20: (-1, 5, 10),
}


def _table_map(params: GraphParams, name: str, table: dict) -> VertexMap:
    def rule(v):
        sign, offset, b = table[v.b[0]]
        return (sign * v.a + offset, (b,))

    return from_rule(params, name, rule)


def reversal_map_b2m7(params: GraphParams) -> VertexMap:
    if params.k != 2 or params.n != 7 or params.m not in (3, 6):
        raise WrongCase(f"need (2, 3, 7) or (2, 6, 7); got {params.triple}")
    return _table_map(params, "b2m7", _B2M7)


def reversal_map_b2621(params: GraphParams) -> VertexMap:
    if params.triple != (2, 6, 21):
        raise WrongCase(f"need (2, 6, 21); got {params.triple}")
    return _table_map(params, "b2621", _B2621)


def b2m7_table_any_m(params: GraphParams, uncorrected: bool = False) -> VertexMap:
    """The B(2, m, 7) table applied for any m, optionally uncorrected."""
    if params.k != 2 or params.n != 7:
        raise WrongCase(f"need k = 2, n = 7; got {params.triple}")
    return _table_map(params, "b2m7*", B2M7_UNCORRECTED if uncorrected else _B2M7)


def explicit_reversal(params: GraphParams) -> VertexMap | None:
    """The known arc-reversing map for these parameters, if any."""
    if params.n == 3:
        return reversal_map_n3(params)
    if params.k == 2 and params.n == 5:
        return reversal_map_k2n5(params)
    if params.k == 2 and params.n == 7 and params.m in (3, 6):
        return reversal_map_b2m7(params)
    if params.triple == (2, 6, 21):
        return reversal_map_b2621(params)
    return None
