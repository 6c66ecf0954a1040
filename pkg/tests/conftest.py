"""Shared fixtures.  networkx serves as the independent oracle: its girth,
bipartiteness, cycle enumeration and VF2++ isomorphism search share no code
with the package."""

from functools import lru_cache

import networkx as nx
import pytest

from bouwer.core import build_graph, validate_params


@lru_cache(maxsize=None)
def graph(k, m, n, allow_multigraph=False):
    return build_graph(validate_params(k, m, n), allow_multigraph=allow_multigraph)


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    return G


def nx_reverses_arc(g, u=None, v=None):
    """Whether some automorphism swaps u and v, decided by VF2++ with the two
    endpoints pinned through node labels."""
    u = g.params.origin if u is None else u
    v = g.params.one if v is None else v
    G1, G2 = to_nx(g), to_nx(g)
    nx.set_node_attributes(G1, 0, "pin")
    nx.set_node_attributes(G2, 0, "pin")
    G1.nodes[u]["pin"], G1.nodes[v]["pin"] = 1, 2
    G2.nodes[v]["pin"], G2.nodes[u]["pin"] = 1, 2
    return nx.vf2pp_is_isomorphic(G1, G2, node_label="pin")


def nx_cycles_at(g, base, length):
    """Cycles of the given length through base, found inside the ball of
    radius length // 2 (any such cycle lies there)."""
    ball = nx.ego_graph(to_nx(g), base, radius=length // 2)
    return [c for c in nx.simple_cycles(ball, length_bound=length)
            if len(c) == length and base in c]


@pytest.fixture
def make_graph():
    return graph
