"""Plain-text interchange formats.

* edge list: one ``"i j"`` line per edge, i < j, lexicographic order; parallel
  edges are repeated.
* vertex labels: ``"index: (a; b_2,...,b_k)"``, one per vertex.
* permutations: ``"i -> j"`` sorted by i.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .core import BouwerGraph, GraphParams, Vertex


def format_edge_list(graph: BouwerGraph) -> str:
    return "".join(f"{i} {j}\n" for i, j in graph.edges())


def parse_edge_list(text: str) -> list[tuple[int, int]]:
    edges = []
    for line in text.splitlines():
        if line.strip():
            i, j = map(int, line.split())
            edges.append((i, j))
    return edges


def format_vertex(v: Vertex) -> str:
    return f"({v.a}; {','.join(map(str, v.b))})"


def format_labels(params: GraphParams) -> str:
    return "".join(f"{i}: {format_vertex(params.from_index(i))}\n"
                   for i in range(params.order))


_LABEL = re.compile(r"^\s*(\d+):\s*\((\d+);\s*([\d,\s]*)\)\s*$")


def parse_labels(text: str) -> dict[int, Vertex]:
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        match = _LABEL.match(line)
        if match is None:
            raise ValueError(f"bad label line: {line!r}")
        i, a, b = match.groups()
        out[int(i)] = Vertex(int(a), tuple(int(x) for x in b.split(",") if x.strip()))
    return out


def format_permutation(perm: Sequence[int]) -> str:
    return "".join(f"{i} -> {j}\n" for i, j in enumerate(perm))


def parse_permutation(lines: str | Iterable[str]) -> list[int]:
    if isinstance(lines, str):
        lines = lines.splitlines()
    pairs = []
    for line in lines:
        if line.strip():
            i, j = line.split("->")
            pairs.append((int(i), int(j)))
    pairs.sort()
    if [i for i, _ in pairs] != list(range(len(pairs))):
        raise ValueError("permutation lines must cover 0..N-1 exactly once")
    return [j for _, j in pairs]
