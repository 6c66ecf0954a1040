"""Bouwer graphs B(k, m, n): parameters, vertex arithmetic and construction.

Vertices are pairs ``(a, b)`` with ``a`` in Z_m and ``b`` a (k-1)-tuple over
Z_n.  Everything else in the package works with the canonical integer index

    index(a, b) = a * n**(k-1) + sum(b[i] * n**i)

so adjacency lives in flat tuples.  Coordinates of ``b`` are 0-indexed:
``b[0]`` is the entry the literature calls ``b_2``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .errors import IntegrityViolation, NotUnit, TooSmall


def mod_inverse(a: int, n: int) -> int:
    """Inverse of ``a`` modulo ``n`` via the extended Euclidean algorithm."""
    old_r, r = a % n, n
    old_x, x = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
    if old_r != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    return old_x % n


def multiplicative_order(a: int, n: int) -> int:
    """Least t >= 1 with a**t == 1 (mod n)."""
    if n == 1:
        return 1
    a %= n
    x, t = a, 1
    while x != 1:
        x = x * a % n
        t += 1
        if t > n:
            raise ValueError(f"{a} is not a unit modulo {n}")
    return t


class Vertex(NamedTuple):
    a: int
    b: tuple[int, ...]

    def __str__(self) -> str:
        return f"({self.a}; {','.join(map(str, self.b))})"


@dataclass(frozen=True)
class GraphParams:
    k: int
    m: int
    n: int
    inv2: int
    ord2: int

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.k, self.m, self.n)

    @property
    def dim(self) -> int:
        """Length of the ``b`` part of a vertex."""
        return self.k - 1

    @property
    def valency(self) -> int:
        return 2 * self.k

    @cached_property
    def block(self) -> int:
        return self.n ** (self.k - 1)

    @property
    def order(self) -> int:
        return self.m * self.block

    @cached_property
    def pow2(self) -> tuple[int, ...]:
        """2**a mod n for a = 0..m-1."""
        return tuple(pow(2, a, self.n) for a in range(self.m))

    @cached_property
    def place(self) -> tuple[int, ...]:
        return tuple(self.n ** i for i in range(self.k - 1))

    def power_of_two(self, e: int) -> int:
        """2**e mod n for any integer e (negative allowed)."""
        return self.pow2[e % self.ord2]

    def vertex(self, a: int, b: Sequence[int] | None = None) -> Vertex:
        """Build a reduced vertex; ``b`` defaults to the zero vector."""
        if b is None:
            b = (0,) * self.dim
        if len(b) != self.dim:
            raise ValueError(f"b must have length {self.dim}, got {len(b)}")
        return Vertex(a % self.m, tuple(x % self.n for x in b))

    def unit(self, j: int, scale: int = 1) -> tuple[int, ...]:
        """``scale * e_j`` as a b-vector (j is 0-indexed)."""
        v = [0] * self.dim
        v[j] = scale % self.n
        return tuple(v)

    def index(self, v: Vertex | tuple) -> int:
        a, b = v
        return (a % self.m) * self.block + sum(
            (x % self.n) * p for x, p in zip(b, self.place))

    def from_index(self, i: int) -> Vertex:
        if not 0 <= i < self.order:
            raise IndexError(i)
        a, rest = divmod(i, self.block)
        b = []
        for _ in range(self.dim):
            rest, d = divmod(rest, self.n)
            b.append(d)
        return Vertex(a, tuple(b))

    @property
    def origin(self) -> int:
        return 0

    @property
    def one(self) -> int:
        """Index of (1, 0)."""
        return self.block % self.order


def validate_params(k: int, m: int, n: int) -> GraphParams:
    """Check that (k, m, n) defines a Bouwer graph and derive constants."""
    if min(k, m, n) < 2:
        raise TooSmall(f"k, m, n must all exceed 1; got ({k}, {m}, {n})")
    if pow(2, m, n) != 1:
        raise NotUnit(f"2^{m} = {pow(2, m, n)} (mod {n}), need 1")
    return GraphParams(k, m, n, mod_inverse(2, n), multiplicative_order(2, n))


def neighbor_indices(params: GraphParams, i: int) -> list[int]:
    """Raw neighbour multiset of vertex index ``i``, sorted.

    For valid parameters with m >= 3 the entries are distinct; for m = 2 each
    neighbour appears twice.
    """
    p = params
    a, bidx = divmod(i, p.block)
    up = (a + 1) % p.m * p.block
    down = (a - 1) % p.m * p.block
    step_up = p.pow2[a]
    step_down = p.pow2[a] * p.inv2 % p.n
    out = [up + bidx, down + bidx]
    rest = bidx
    for place in p.place:
        rest, d = divmod(rest, p.n)
        base = bidx - d * place
        out.append(up + base + (d + step_up) % p.n * place)
        out.append(down + base + (d - step_down) % p.n * place)
    out.sort()
    return out


def neighbors(params: GraphParams, v: Vertex) -> list[Vertex]:
    """The 2k neighbours of ``v`` sorted by canonical index."""
    return [params.from_index(j) for j in neighbor_indices(params, params.index(v))]


@dataclass(frozen=True)
class BouwerGraph:
    params: GraphParams
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.adjacency)

    @property
    def valency(self) -> int:
        return self.params.valency

    @cached_property
    def is_simple(self) -> bool:
        return all(len(set(row)) == len(row) for row in self.adjacency)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @cached_property
    def simple_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency of the underlying simple graph (repeats removed)."""
        if self.is_simple:
            return self.adjacency
        return tuple(tuple(sorted(set(row))) for row in self.adjacency)

    def multiplicity(self, u: int, v: int) -> int:
        return self.adjacency[u].count(v)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with i < j, repeated per multiplicity, sorted."""
        return [(i, j) for i, row in enumerate(self.adjacency) for j in row if i < j]

    @property
    def edge_count(self) -> int:
        return self.order * self.valency // 2


def build_graph(params: GraphParams, allow_multigraph: bool = False) -> BouwerGraph:
    """Construct B(k, m, n) and check symmetry, regularity and simplicity.

    Repeated neighbours raise IntegrityViolation unless ``allow_multigraph``
    is set, in which case they are kept as parallel edges.
    """
    adj = tuple(tuple(neighbor_indices(params, i)) for i in range(params.order))
    graph = BouwerGraph(params, adj)
    _check_integrity(graph, allow_multigraph)
    return graph


def _check_integrity(graph: BouwerGraph, allow_multigraph: bool) -> None:
    p = graph.params
    if graph.order != p.order:
        raise IntegrityViolation(f"order {graph.order} != {p.order}")
    for i, row in enumerate(graph.adjacency):
        if len(row) != p.valency:
            raise IntegrityViolation(f"vertex {i} has valency {len(row)}")
        if i in row:
            raise IntegrityViolation(f"loop at vertex {i}")
        if not allow_multigraph and len(set(row)) != len(row):
            dup = next(j for j in row if row.count(j) > 1)
            raise IntegrityViolation(
                f"B{p.triple} is not simple: {p.from_index(i)} and "
                f"{p.from_index(dup)} are joined {row.count(dup)} times")
        for j in set(row):
            if graph.adjacency[j].count(i) != row.count(j):
                raise IntegrityViolation(f"adjacency not symmetric at ({i}, {j})")


def is_bipartite(graph: BouwerGraph) -> bool:
    """Two-colour the graph by BFS."""
    colour = [-1] * graph.order
    for start in range(graph.order):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in graph.adjacency[u]:
                if colour[w] < 0:
                    colour[w] = colour[u] ^ 1
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def is_connected(graph: BouwerGraph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in graph.neighbor_sets[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == graph.order


@dataclass(frozen=True)
class Transport:
    """The automorphism x -> tau**tau_power(x - (0, shift)).

    Translation of the b-part by a constant vector and tau are both
    automorphisms, so the composite is one too.
    """

    params: GraphParams
    shift: tuple[int, ...]
    tau_power: int

    @property
    def is_identity(self) -> bool:
        return self.tau_power % self.params.m == 0 and not any(self.shift)

    def __call__(self, v: Vertex) -> Vertex:
        p = self.params
        c = p.power_of_two(self.tau_power)
        return p.vertex(v.a + self.tau_power,
                        [(x - s) * c for x, s in zip(v.b, self.shift)])


def transport_to_origin(params: GraphParams, v: Vertex) -> Transport:
    """An automorphism taking ``v`` to (0, 0)."""
    v = params.vertex(*v)
    return Transport(params, v.b, (-v.a) % params.m)
