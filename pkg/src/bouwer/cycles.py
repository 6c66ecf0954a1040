"""Girth, s-arcs and 6-cycles.

Arcs and cycles are tuples of canonical vertex indices.  All walks run over
the underlying simple graph; for the m = 2 multigraphs ``girth`` reports 2
(the doubled edges) and the remaining functions see each edge once.
"""

from __future__ import annotations

from collections import defaultdict, deque
from typing import Sequence

from .core import BouwerGraph


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Least rotation of the cycle or of its reversal."""
    seq = tuple(cycle)
    size = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for r in range(size):
            cand = s[r:] + s[:r]
            if best is None or cand < best:
                best = cand
    return best


def rooted_cycle(cycle: Sequence[int], base: int) -> tuple[int, ...]:
    """Rotate ``cycle`` so it starts at ``base`` (direction unchanged)."""
    i = list(cycle).index(base)
    return tuple(cycle[i:]) + tuple(cycle[:i])


def girth(graph: BouwerGraph) -> int:
    """Length of a shortest cycle, by BFS from every vertex with early exit."""
    if not graph.is_simple:
        return 2
    adj = graph.adjacency
    best = graph.order + 1
    for root in range(graph.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    return best


def enumerate_s_arcs(graph: BouwerGraph, root: int, s: int) -> list[tuple[int, ...]]:
    """All s-arcs starting at ``root`` in lexicographic order."""
    if s < 1:
        raise ValueError("s must be at least 1")
    adj = graph.simple_adjacency
    arcs = [(root,)]
    for _ in range(s):
        arcs = [arc + (w,) for arc in arcs for w in adj[arc[-1]]
                if len(arc) < 2 or w != arc[-2]]
    return arcs


def is_s_arc(graph: BouwerGraph, arc: Sequence[int]) -> bool:
    nbrs = graph.neighbor_sets
    return (all(arc[i + 1] in nbrs[arc[i]] for i in range(len(arc) - 1))
            and all(arc[i - 1] != arc[i + 1] for i in range(1, len(arc) - 1)))


def count_six_cycles_through(graph: BouwerGraph, two_arc: Sequence[int]) -> int:
    """Number of 6-cycles containing the 2-arc ``v0 - v1 - v2`` as a subpath.

    Meet in the middle: 2-step walks forward from v2 and backward from v0 are
    joined on their common endpoint.
    """
    v0, v1, v2 = two_arc
    adj = graph.simple_adjacency
    forward = defaultdict(list)
    for a in adj[v2]:
        if a == v1 or a == v0:
            continue
        for b in adj[a]:
            if b != v2 and b != v0 and b != v1:
                forward[b].append(a)
    count = 0
    for c in adj[v0]:
        if c == v1 or c == v2:
            continue
        for b in adj[c]:
            if b == v0 or b == v1 or b == v2:
                continue
            for a in forward.get(b, ()):
                if a != c:
                    count += 1
    return count


def six_cycles_through_edge(graph: BouwerGraph, v: int, w: int) -> list[tuple[int, int, int, int]]:
    """Every ``(x, y, z, u)`` with ``v - w - x - y - z - u - v`` a 6-cycle."""
    adj = graph.simple_adjacency
    around_v = graph.neighbor_sets[v]
    out = []
    for x in adj[w]:
        if x == v:
            continue
        for y in adj[x]:
            if y == w or y == v:
                continue
            for z in adj[y]:
                if z in (x, w, v):
                    continue
                for u in adj[z]:
                    if u in around_v and u not in (y, x, w):
                        out.append((x, y, z, u))
    return out


def enumerate_cycles_at(graph: BouwerGraph, base: int, length: int) -> list[tuple[int, ...]]:
    """All cycles of the given length (3 to 6) through ``base``, canonicalised
    and sorted."""
    if not 3 <= length <= 6:
        raise ValueError("only cycles of length 3 to 6 are enumerated")
    adj = graph.simple_adjacency
    around = graph.neighbor_sets[base]
    found = set()

    def extend(path):
        last = path[-1]
        if len(path) == length:
            if last in around and path[1] < last:
                found.add(canonical_cycle(path))
            return
        for nxt in adj[last]:
            if nxt not in path:
                extend(path + (nxt,))

    extend((base,))
    return sorted(found)


def enumerate_six_cycles_at(graph: BouwerGraph, base: int) -> list[tuple[int, ...]]:
    """All 6-cycles through ``base``, canonicalised and sorted."""
    return enumerate_cycles_at(graph, base, 6)


def six_cycle_census_by_two_arc(graph: BouwerGraph, base: int) -> dict[tuple[int, int, int], int]:
    """For each 2-arc starting at ``base``, how many of the enumerated
    6-cycles at ``base`` contain it (used to cross-check the direct count)."""
    tally: dict[tuple[int, int, int], int] = defaultdict(int)
    for cycle in enumerate_six_cycles_at(graph, base):
        c = rooted_cycle(cycle, base)
        tally[(c[0], c[1], c[2])] += 1
        tally[(c[0], c[5], c[4])] += 1
    return dict(tally)
