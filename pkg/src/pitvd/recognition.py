"""Target-class recognition with certifying obstructions.

A multigraph is in the target class when it is simple and every connected
component is a proper interval graph or a tree.  ``is_pitg`` decides this
and, on failure, returns one obstruction:

* ``DoubleEdge`` -- a pair joined by parallel edges;
* ``Net`` -- triangle with a pendant at each corner (6 vertices);
* ``Tent`` -- triangle with an extra vertex on each side (6 vertices);
* ``Hole`` -- chordless cycle on >= 4 vertices;
* ``ClawTrianglePair`` -- a claw and a triangle living in one component
  that is otherwise chordal and {net, tent, hole}-free.

Every obstruction except the last must lose a vertex in any valid deletion
set; the pair only certifies that the component as a whole is bad.

Proper interval components are recognized by three lexicographic BFS
sweeps (the second and third tie-break toward the vertex placed latest in
the previous sweep) followed by an umbrella-ordering verification of the
final sweep; a component passes the verification exactly when it is a
proper interval graph.  The obstruction search on failed components is
independent of the sweeps, so the two halves cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import backend as bk
from ._bitcore import bits
from .multigraph import MultiGraph


@dataclass(frozen=True)
class DoubleEdge:
    u: int
    v: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.u, self.v)


@dataclass(frozen=True)
class Net:
    #: (a, b, c, x, y, z): triangle abc, pendant x at a, y at b, z at c
    corners: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.corners


@dataclass(frozen=True)
class Tent:
    #: (a, b, c, x, y, z): triangle abc, x on side ab, y on bc, z on ca
    corners: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.corners


@dataclass(frozen=True)
class Hole:
    #: vertices in cyclic order
    cycle: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.cycle


@dataclass(frozen=True)
class ClawTrianglePair:
    claw: tuple[int, ...]  # (center, leg, leg, leg)
    triangle: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(dict.fromkeys(self.claw + self.triangle))


Obstruction = DoubleEdge | Net | Tent | Hole | ClawTrianglePair


# ---------------------------------------------------------------------------
# lexicographic BFS
# ---------------------------------------------------------------------------

def _lbfs(adjm: list[int], verts: list[int], prev_pos=None) -> list[int]:
    """One LBFS sweep over ``verts`` (positions), by partition refinement.

    Ties inside the first slice go to the smallest position on the first
    sweep, and to the vertex latest in the previous sweep afterwards.
    """
    slices = [list(verts)]
    order: list[int] = []
    while slices:
        first = slices[0]
        if prev_pos is None:
            v = min(first)
        else:
            v = max(first, key=prev_pos.__getitem__)
        first.remove(v)
        order.append(v)
        nb = adjm[v]
        refined = []
        for s in slices:
            ins = [u for u in s if (nb >> u) & 1]
            outs = [u for u in s if not (nb >> u) & 1]
            if ins:
                refined.append(ins)
            if outs:
                refined.append(outs)
        slices = refined
    return order


def pig_order(adjm: list[int], comp: int):
    """Umbrella ordering of one connected component, or None.

    Three-sweep LBFS; the final sweep is an umbrella ordering iff the
    component is a proper interval graph, which the last step verifies.
    """
    verts = [v for v in bits(comp)]
    if len(verts) <= 2:
        return tuple(verts)
    s1 = _lbfs(adjm, verts)
    s2 = _lbfs(adjm, verts, {v: i for i, v in enumerate(s1)})
    s3 = _lbfs(adjm, verts, {v: i for i, v in enumerate(s2)})
    return tuple(s3) if bk.umbrella_ok(adjm, s3) else None


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

def _bfs_path(adjm, allowed: int, x: int, y: int):
    """Shortest x-y path inside ``allowed`` as a vertex list, or None."""
    if not ((allowed >> x) & 1 and (allowed >> y) & 1):
        return None
    parent = {x: -1}
    frontier = 1 << x
    seen = 1 << x
    while frontier and not (seen >> y) & 1:
        nxt = 0
        for v in bits(frontier):
            new = adjm[v] & allowed & ~seen & ~nxt
            for u in bits(new):
                parent[u] = v
            nxt |= new
        seen |= nxt
        frontier = nxt
    if not (seen >> y) & 1:
        return None
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def find_hole(adjm: list[int], comp: int, seed=None):
    """A chordless cycle through some vertex of ``comp``, or None.

    For each candidate (v, x, y) with x, y nonadjacent neighbors of v, a
    shortest x-y path avoiding the rest of N[v] closes into a hole through
    v; every hole of the graph is discoverable this way, so a non-chordal
    component always yields one.  ``seed`` is an optional (v, x, y) triple
    tried first (e.g. from the chordality check).
    """

    def candidates():
        if seed is not None:
            yield seed
        for v in bits(comp):
            nbv = adjm[v] & comp
            for x in bits(nbv):
                for y in bits(nbv & ~adjm[x] & ~((1 << (x + 1)) - 1)):
                    yield (v, x, y)

    for v, x, y in candidates():
        avoid = (adjm[v] | (1 << v)) & ~(1 << x) & ~(1 << y)
        path = _bfs_path(adjm, comp & ~avoid, x, y)
        if path is not None:
            return (v, *path)
    return None


def _component_witness(adjm, comp) -> Obstruction | None:
    """Preferred obstruction of one bad component (positions, untranslated).

    Preference: net, tent, short hole (<= 6), any hole, claw+triangle.
    """
    wits = bk.net_tent_witnesses(adjm, comp, True)
    for want in ("net", "tent"):
        for kind, t in wits:
            if kind == want:
                return Net(t) if want == "net" else Tent(t)
    short = bk.small_cycles(adjm, comp, False)
    if short:
        return Hole(short[0])
    fail = bk.chordal_fail(adjm, comp)
    if fail is not None:
        hole = find_hole(adjm, comp, seed=fail)
        if hole is None:  # pragma: no cover - contradicts chordality failure
            raise AssertionError("non-chordal component without a hole")
        return Hole(tuple(hole))
    claw = bk.find_claw(adjm, comp)
    tri = bk.find_triangle(adjm, comp)
    if claw is None or tri is None:
        return None
    return ClawTrianglePair(claw, tri)


def _translate(obs: Obstruction, ids: list[int]) -> Obstruction:
    if isinstance(obs, Net):
        return Net(tuple(ids[p] for p in obs.corners))
    if isinstance(obs, Tent):
        return Tent(tuple(ids[p] for p in obs.corners))
    if isinstance(obs, Hole):
        return Hole(tuple(ids[p] for p in obs.cycle))
    if isinstance(obs, ClawTrianglePair):
        return ClawTrianglePair(tuple(ids[p] for p in obs.claw),
                                tuple(ids[p] for p in obs.triangle))
    raise TypeError(obs)


def is_pitg(g: MultiGraph) -> tuple[bool, Obstruction | None]:
    """Decide membership in the target class; certify failure.

    Returns ``(True, None)`` or ``(False, obstruction)`` with the
    obstruction stated in stable vertex ids.  Preference order: double
    edge, then per first bad component: net, tent, short hole, any hole,
    claw+triangle pair.
    """
    doubles = g.double_edges()
    if doubles:
        return False, DoubleEdge(*doubles[0])
    ids, _, adjm = g.compact()
    full = (1 << len(ids)) - 1
    for comp in bk.comp_masks(adjm, full):
        nv = comp.bit_count()
        if bk.count_edges(adjm, comp) == nv - 1:
            continue  # connected with n-1 edges: a tree
        if pig_order(adjm, comp) is not None:
            continue
        obs = _component_witness(adjm, comp)
        if obs is None:  # pragma: no cover - sweeps and witnesses disagree
            raise AssertionError("component rejected but no obstruction found")
        return False, _translate(obs, ids)
    return True, None


def component_clean(g: MultiGraph, comp: list[int]) -> bool:
    """Is the induced component simple and a proper interval graph or tree?"""
    ids, _, adjm = g.compact(comp)
    for i, u in enumerate(ids):
        for v in ids[i + 1:]:
            if g.multiplicity(u, v) >= 2:
                return False
    full = (1 << len(ids)) - 1
    if bk.count_edges(adjm, full) == len(ids) - 1:
        return True
    return pig_order(adjm, full) is not None


def obstruction_sets(g: MultiGraph) -> list[tuple[str, frozenset[int]]]:
    """All nets, tents and short holes (4-6) of the underlying simple graph.

    Returned as (kind, vertex-id set) pairs in deterministic order; the
    modulator construction feeds these to the set-family reductions.
    """
    ids, _, adjm = g.compact()
    full = (1 << len(ids)) - 1
    out: list[tuple[str, frozenset[int]]] = []
    for kind, t in bk.net_tent_witnesses(adjm, full, True):
        out.append((kind, frozenset(ids[p] for p in t)))
    for cyc in bk.small_cycles(adjm, full, True):
        out.append(("hole", frozenset(ids[p] for p in cyc)))
    return out
