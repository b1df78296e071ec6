"""Shared helpers: graph builders and slow independent oracles.

The oracles here deliberately avoid the package's own algorithms (they lean
on itertools and networkx instead) so that agreement is evidence, not
circularity.
"""

from __future__ import annotations

import itertools

import networkx as nx

from pitvd.multigraph import MultiGraph


def adj_from_edges(n: int, edges) -> list[int]:
    """Bitmask adjacency for vertex positions 0..n-1."""
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def mask_of(n: int) -> int:
    return (1 << n) - 1


def nx_from_adj(adj: list[int], mask: int | None = None) -> nx.Graph:
    g = nx.Graph()
    full = mask_of(len(adj)) if mask is None else mask
    for v in range(len(adj)):
        if (full >> v) & 1:
            g.add_node(v)
    for v in g.nodes:
        nb = adj[v] & full
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            if u > v:
                g.add_edge(v, u)
    return g


def graph_from_int(n: int, code: int) -> list[int]:
    """Decode a graph from the integer whose bits are the C(n,2) edge slots."""
    edges = []
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (code >> i) & 1:
                edges.append((u, v))
            i += 1
    return adj_from_edges(n, edges)


def all_graphs(n: int):
    for code in range(1 << (n * (n - 1) // 2)):
        yield graph_from_int(n, code)


def random_adj(rng, n: int, p: float) -> list[int]:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return adj_from_edges(n, edges)


def random_multigraph(rng, n: int, p: float, double_frac: float = 0.0) -> MultiGraph:
    g = MultiGraph()
    ids = [g.add_vertex() for _ in range(n)]
    for u, v in itertools.combinations(ids, 2):
        if rng.random() < p:
            g.add_edge(u, v, 2 if rng.random() < double_frac else 1)
    return g


def to_networkx(g: MultiGraph) -> nx.Graph:
    """Underlying simple graph of a MultiGraph."""
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    for u, v, _m in g.edges():
        out.add_edge(u, v)
    return out


# ---------------------------------------------------------------------------
# brute-force structure oracles (itertools-based, independent of pitvd)
# ---------------------------------------------------------------------------

def brute_triangles(adj, mask):
    vs = [v for v in range(len(adj)) if (mask >> v) & 1]
    out = []
    for a, b, c in itertools.combinations(vs, 3):
        if (adj[a] >> b) & 1 and (adj[a] >> c) & 1 and (adj[b] >> c) & 1:
            out.append((a, b, c))
    return out


def brute_claws(adj, mask):
    vs = [v for v in range(len(adj)) if (mask >> v) & 1]
    out = []
    for c in vs:
        legs = [v for v in vs if (adj[c] >> v) & 1]
        for a, b, d in itertools.combinations(legs, 3):
            if not ((adj[a] >> b) & 1 or (adj[a] >> d) & 1 or (adj[b] >> d) & 1):
                out.append((c, a, b, d))
    return out


def brute_induced_cycles(adj, mask, lengths=(4, 5, 6)):
    """Vertex sets (frozensets) of induced cycles of the given lengths."""
    g = nx_from_adj(adj, mask)
    found = set()
    for ln in lengths:
        ref = nx.cycle_graph(ln)
        for sub in itertools.combinations(sorted(g.nodes), ln):
            if nx.is_isomorphic(g.subgraph(sub), ref):
                found.add(frozenset(sub))
    return found


def validate_obstruction(g, obs) -> None:
    """Assert that an obstruction really occurs in multigraph ``g``."""
    from pitvd import recognition as R

    def edge(u, v):
        assert g.has_edge(u, v), (u, v, obs)

    def nonedge(u, v):
        assert not g.has_edge(u, v), (u, v, obs)

    if isinstance(obs, R.DoubleEdge):
        assert g.multiplicity(obs.u, obs.v) >= 2
        return
    if isinstance(obs, R.Net):
        a, b, c, x, y, z = obs.corners
        assert len(set(obs.corners)) == 6
        for u, v in [(a, b), (a, c), (b, c), (a, x), (b, y), (c, z)]:
            edge(u, v)
        for u, v in [(x, y), (x, z), (y, z), (x, b), (x, c), (y, a), (y, c),
                     (z, a), (z, b)]:
            nonedge(u, v)
        return
    if isinstance(obs, R.Tent):
        a, b, c, x, y, z = obs.corners
        assert len(set(obs.corners)) == 6
        for u, v in [(a, b), (a, c), (b, c), (x, a), (x, b), (y, b), (y, c),
                     (z, c), (z, a)]:
            edge(u, v)
        for u, v in [(x, c), (y, a), (z, b), (x, y), (y, z), (x, z)]:
            nonedge(u, v)
        return
    if isinstance(obs, R.Hole):
        cyc = obs.cycle
        k = len(cyc)
        assert k >= 4 and len(set(cyc)) == k
        for i in range(k):
            for j in range(i + 1, k):
                if j - i == 1 or (i == 0 and j == k - 1):
                    edge(cyc[i], cyc[j])
                else:
                    nonedge(cyc[i], cyc[j])
        return
    if isinstance(obs, R.ClawTrianglePair):
        center, *legs = obs.claw
        assert len(legs) == 3
        for leg in legs:
            edge(center, leg)
        for i in range(3):
            for j in range(i + 1, 3):
                nonedge(legs[i], legs[j])
        t = obs.triangle
        assert len(set(t)) == 3
        for i in range(3):
            edge(t[i], t[(i + 1) % 3])
        assert g.component_of(center) == g.component_of(t[0])
        return
    raise AssertionError(f"unknown obstruction {obs!r}")


_NET = nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)])
_TENT = nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (1, 4), (2, 4),
                  (2, 5), (0, 5)])


def brute_net_tent_sets(adj, mask):
    """(kind, frozenset) pairs for every induced net or tent."""
    g = nx_from_adj(adj, mask)
    out = set()
    for sub in itertools.combinations(sorted(g.nodes), 6):
        h = g.subgraph(sub)
        m = h.number_of_edges()
        if m == 6 and nx.is_isomorphic(h, _NET):
            out.add(("net", frozenset(sub)))
        elif m == 9 and nx.is_isomorphic(h, _TENT):
            out.add(("tent", frozenset(sub)))
    return out


def unit_interval_graph(rng, n, spread):
    """Random unit interval (= proper interval) multigraph."""
    centers = sorted(rng.uniform(0, spread) for _ in range(n))
    g = MultiGraph()
    ids = [g.add_vertex() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if centers[j] - centers[i] <= 1.0:
                g.add_edge(ids[i], ids[j])
    return g
