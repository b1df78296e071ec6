"""Undirected multigraph with stable integer vertex ids.

Vertices are identified by non-negative integers that never get reused or
renumbered by any operation, so reduction traces can refer to vertices by id
across the whole run.  Edge multiplicities are arbitrary positive integers
(the reduction pipeline caps them at 2 early on, but the container does not
care).  Self-loops are rejected.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, NamedTuple


class Deg2Path(NamedTuple):
    """A maximal path whose internal vertices all have degree exactly 2.

    ``kind`` is ``"tail"`` (first vertex has degree > 2, last has degree 1),
    ``"overbridge"`` (both endpoint degrees > 2) or ``"other"``.
    """

    vertices: tuple[int, ...]
    kind: str


class MultiGraph:
    def __init__(self) -> None:
        self._adj: dict[int, dict[int, int]] = {}
        self._next_id = 0

    # -- construction ---------------------------------------------------

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int] | tuple[int, int, int]],
                   vertices: Iterable[int] = ()) -> "MultiGraph":
        """Build a graph from ``(u, v)`` or ``(u, v, multiplicity)`` tuples.

        Repeated pairs accumulate multiplicity.  ``vertices`` may list extra
        isolated vertices.
        """
        g = cls()
        for v in vertices:
            g.ensure_vertex(v)
        for e in edges:
            if len(e) == 2:
                u, v = e  # type: ignore[misc]
                m = 1
            else:
                u, v, m = e  # type: ignore[misc]
            g.ensure_vertex(u)
            g.ensure_vertex(v)
            g.add_edge(u, v, m)
        return g

    def copy(self) -> "MultiGraph":
        g = MultiGraph()
        g._adj = {v: dict(nbrs) for v, nbrs in self._adj.items()}
        g._next_id = self._next_id
        return g

    # -- vertices -------------------------------------------------------

    def add_vertex(self) -> int:
        """Create a fresh vertex and return its (never reused) id."""
        v = self._next_id
        self._next_id += 1
        self._adj[v] = {}
        return v

    def ensure_vertex(self, v: int) -> int:
        if v < 0:
            raise ValueError(f"vertex ids must be non-negative, got {v}")
        if v not in self._adj:
            self._adj[v] = {}
            if v >= self._next_id:
                self._next_id = v + 1
        return v

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def delete_vertex(self, v: int) -> None:
        for u in list(self._adj[v]):
            del self._adj[u][v]
        del self._adj[v]

    def delete_vertices(self, vs: Iterable[int]) -> None:
        for v in list(vs):
            self.delete_vertex(v)

    @property
    def vertices(self) -> list[int]:
        return sorted(self._adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    # -- edges ----------------------------------------------------------

    def add_edge(self, u: int, v: int, multiplicity: int = 1) -> None:
        """Add ``multiplicity`` parallel copies of edge uv."""
        if u == v:
            raise ValueError(f"self-loop at vertex {u} not allowed")
        if multiplicity <= 0:
            raise ValueError("multiplicity must be positive")
        if u not in self._adj or v not in self._adj:
            raise KeyError("both endpoints must exist")
        self._adj[u][v] = self._adj[u].get(v, 0) + multiplicity
        self._adj[v][u] = self._adj[u][v]

    def set_multiplicity(self, u: int, v: int, multiplicity: int) -> None:
        """Force edge uv to the given multiplicity; 0 removes the edge."""
        if u == v:
            raise ValueError(f"self-loop at vertex {u} not allowed")
        if multiplicity < 0:
            raise ValueError("multiplicity must be non-negative")
        if multiplicity == 0:
            self._adj[u].pop(v, None)
            self._adj[v].pop(u, None)
        else:
            self._adj[u][v] = multiplicity
            self._adj[v][u] = multiplicity

    def multiplicity(self, u: int, v: int) -> int:
        return self._adj[u].get(v, 0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbors of v, sorted."""
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        """Degree counting multiplicities."""
        return sum(self._adj[v].values())

    def simple_degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, multiplicity)`` with u < v, sorted."""
        for u in sorted(self._adj):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v, self._adj[u][v])

    @property
    def edge_count(self) -> int:
        """Number of edges counting multiplicities."""
        return sum(m for _, _, m in self.edges())

    @property
    def distinct_edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self.edges())

    def double_edges(self) -> list[tuple[int, int]]:
        """Pairs (u, v), u < v, joined by 2 or more parallel edges."""
        return [(u, v) for u, v, m in self.edges() if m >= 2]

    # -- structure ------------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum id."""
        seen: set[int] = set()
        comps = []
        for s in sorted(self._adj):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def component_of(self, v: int) -> list[int]:
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def induced(self, vs: Iterable[int]) -> "MultiGraph":
        """Induced sub-multigraph on ``vs``; stable ids are preserved."""
        keep = set(vs)
        g = MultiGraph()
        for v in keep:
            if v not in self._adj:
                raise KeyError(f"vertex {v} not in graph")
        g._adj = {v: {u: m for u, m in self._adj[v].items() if u in keep} for v in keep}
        g._next_id = self._next_id
        return g

    def is_tree(self, vs: Iterable[int] | None = None) -> bool:
        """True iff the (sub)graph induced on ``vs`` is a simple connected tree."""
        verts = list(self._adj) if vs is None else list(vs)
        if not verts:
            return False
        keep = set(verts)
        m = 0
        for v in verts:
            for u, mult in self._adj[v].items():
                if u in keep:
                    if mult > 1:
                        return False
                    m += 1
        m //= 2
        if m != len(verts) - 1:
            return False
        # connected?
        seen = {verts[0]}
        queue = deque([verts[0]])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y in keep and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == len(verts)

    def is_forest(self, vs: Iterable[int] | None = None) -> bool:
        verts = list(self._adj) if vs is None else list(vs)
        keep = set(verts)
        m = 0
        for v in verts:
            for u, mult in self._adj[v].items():
                if u in keep:
                    if mult > 1:
                        return False
                    m += 1
        m //= 2
        if not verts:
            return True
        sub = self.induced(verts) if vs is not None else self
        return m == len(verts) - len(sub.components())

    # -- degree-2 structure --------------------------------------------

    def attach_tail(self, v: int, length: int) -> list[int]:
        """Attach a fresh path u1..u_length pendant at v; returns the new ids."""
        if length <= 0:
            raise ValueError("tail length must be positive")
        new = []
        prev = v
        for _ in range(length):
            u = self.add_vertex()
            self.add_edge(prev, u)
            new.append(u)
            prev = u
        return new

    def find_degree2_paths(self) -> list[Deg2Path]:
        """All maximal degree-2 paths, canonically oriented and sorted.

        Each chain of degree-2 vertices (having exactly two distinct
        single-edge neighbors) is extended by its boundary vertices.  Kinds:
        ``tail`` anchors at a degree->2 vertex and ends in a pendant vertex,
        ``overbridge`` has both endpoint degrees > 2, anything else (path
        components, cycles hanging at one anchor, pure cycles) is ``other``.
        A vertex is internal to at most one returned path.
        """

        def chainlike(v: int) -> bool:
            nbrs = self._adj[v]
            return len(nbrs) == 2 and all(m == 1 for m in nbrs.values())

        chain_verts = {v for v in self._adj if chainlike(v)}
        paths: list[Deg2Path] = []
        unprocessed = set(chain_verts)
        for s in sorted(chain_verts):
            if s not in unprocessed:
                continue
            # Collect the chain component of s in path order; a walk that
            # comes back to s means the component is a chordless cycle.
            order = [s]
            cycle = False
            prev, cur = None, s
            while True:
                ext = [y for y in self._adj[cur] if y in chain_verts and y != prev]
                if not ext:
                    break
                nxt = min(ext)
                if nxt == s:
                    cycle = True
                    break
                order.append(nxt)
                prev, cur = cur, nxt
            if not cycle:
                prev, cur = (order[1] if len(order) > 1 else None), s
                while True:
                    ext = [y for y in self._adj[cur] if y in chain_verts and y != prev]
                    if not ext:
                        break
                    nxt = min(ext)
                    order.insert(0, nxt)
                    prev, cur = cur, nxt
            unprocessed -= set(order)
            if cycle:
                lo = order.index(min(order))
                order = order[lo:] + order[:lo]
                paths.append(Deg2Path(tuple(order), "other"))
                continue
            first, last = order[0], order[-1]
            out_first = [y for y in sorted(self._adj[first]) if y not in chain_verts]
            out_last = [y for y in sorted(self._adj[last]) if y not in chain_verts]
            if len(order) == 1:
                a, b = out_first
            else:
                a, b = out_first[0], out_last[0]
            if a == b:
                # cycle hanging at a single anchor
                paths.append(Deg2Path(tuple([a] + order), "other"))
                continue
            verts = [a] + order + [b]
            da, db = self.degree(a), self.degree(b)
            if da > 2 and db == 1:
                paths.append(Deg2Path(tuple(verts), "tail"))
            elif db > 2 and da == 1:
                paths.append(Deg2Path(tuple(reversed(verts)), "tail"))
            elif da > 2 and db > 2:
                if a > b:
                    verts.reverse()
                paths.append(Deg2Path(tuple(verts), "overbridge"))
            else:
                if verts[0] > verts[-1]:
                    verts.reverse()
                paths.append(Deg2Path(tuple(verts), "other"))
        paths.sort(key=lambda p: p.vertices)
        return paths

    # -- misc -----------------------------------------------------------

    def compact(self, vs: Iterable[int] | None = None):
        """Bitmask view: ``(ids, index, adj_masks)`` for the given vertex set.

        ``ids`` is the sorted vertex list, ``index`` maps id -> position and
        ``adj_masks[i]`` has bit j set iff ids[i] and ids[j] share an edge
        (multiplicities are ignored here).
        """
        ids = sorted(self._adj) if vs is None else sorted(vs)
        index = {v: i for i, v in enumerate(ids)}
        masks = [0] * len(ids)
        for i, v in enumerate(ids):
            m = 0
            for u in self._adj[v]:
                j = index.get(u)
                if j is not None:
                    m |= 1 << j
            masks[i] = m
        return ids, index, masks

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiGraph) and self._adj == other._adj

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.edge_count})"
