"""Exhaustive search for an automorphism reversing the arc (0,0) -> (1,0).

The search extends a partial map one vertex at a time.  Vertices are taken in
a fixed order that always picks the unplaced vertex with the most placed
neighbours (ties: nearer the arc, then lower index), and a candidate image is
accepted only if adjacency to every placed vertex is preserved exactly, with
multiplicity.  The search never looks at cycle counts, so it stays independent
of the certificate it is used to check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import BouwerGraph
from .errors import BudgetExhausted
from .symmetry import VertexMap, swaps_arc, verify_automorphism

DEFAULT_BUDGET = 10 ** 8


@dataclass(frozen=True)
class OracleResult:
    reversible: bool
    witness: VertexMap | None
    nodes_explored: int


def search_order(graph: BouwerGraph, u: int, v: int) -> list[int]:
    """Most-constrained-first placement order starting with the edge {u, v}."""
    nbrs = graph.simple_adjacency
    dist = [-1] * graph.order
    dist[u] = dist[v] = 0
    queue = deque([u, v])
    while queue:
        x = queue.popleft()
        for y in nbrs[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    far = graph.order + 1
    placed_nbrs = [0] * graph.order
    placed = [False] * graph.order
    order = []
    # buckets[c] holds candidates with c placed neighbours; lazily cleaned
    buckets: list[set[int]] = [set() for _ in range(graph.valency + 2)]
    buckets[0] = set(range(graph.order))

    def place(x):
        placed[x] = True
        order.append(x)
        buckets[placed_nbrs[x]].discard(x)
        for y in nbrs[x]:
            if not placed[y]:
                buckets[placed_nbrs[y]].discard(y)
                placed_nbrs[y] += 1
                buckets[placed_nbrs[y]].add(y)

    place(u)
    place(v)
    while len(order) < graph.order:
        c = max(i for i, b in enumerate(buckets) if b)
        x = min(buckets[c], key=lambda y: (dist[y] if dist[y] >= 0 else far, y))
        place(x)
    return order


def oracle_arc_reversal(graph: BouwerGraph, budget: int = DEFAULT_BUDGET,
                        u: int | None = None, v: int | None = None) -> OracleResult:
    """Decide whether some automorphism swaps ``u`` and ``v``.

    Defaults to the arc from (0, 0) to (1, 0).  Raises BudgetExhausted when
    more than ``budget`` candidate assignments would be needed.
    """
    if u is None:
        u = graph.params.origin
    if v is None:
        v = graph.params.one
    nbrs = graph.simple_adjacency
    nsets = graph.neighbor_sets
    multi = not graph.is_simple
    order = search_order(graph, u, v)
    position = {x: i for i, x in enumerate(order)}
    # placed neighbours of each vertex at the time it is placed
    back = [[y for y in nbrs[x] if position[y] < position[x]] for x in order]

    size = graph.order
    image = [-1] * size
    used = [False] * size
    nodes = 0

    def fits(x: int, y: int, back_x: list[int]) -> bool:
        if used[y]:
            return False
        ny = nsets[y]
        for w in back_x:
            if image[w] not in ny:
                return False
        if sum(1 for z in nbrs[y] if used[z]) != len(back_x):
            return False
        if multi:
            for w in back_x:
                if graph.multiplicity(x, w) != graph.multiplicity(y, image[w]):
                    return False
        return True

    def candidates(depth: int) -> list[int]:
        x = order[depth]
        back_x = back[depth]
        pool = nbrs[image[back_x[0]]] if back_x else range(size)
        return [y for y in pool if fits(x, y, back_x)]

    if graph.multiplicity(u, v) == 0:
        return OracleResult(False, None, 0)
    image[u], image[v] = v, u
    used[u] = used[v] = True
    nodes = 1
    stack = [candidates(2)]
    depth = 2
    while stack:
        options = stack[-1]
        x = order[depth]
        if image[x] >= 0:
            used[image[x]] = False
            image[x] = -1
        if not options:
            stack.pop()
            depth -= 1
            continue
        y = options.pop()
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(nodes)
        image[x] = y
        used[y] = True
        if depth + 1 == size:
            witness = VertexMap("oracle", tuple(image))
            if not (verify_automorphism(graph, witness) and swaps_arc(witness, u, v)):
                raise AssertionError("oracle produced an invalid witness")
            return OracleResult(True, witness, nodes)
        depth += 1
        stack.append(candidates(depth))
    return OracleResult(False, None, nodes)
