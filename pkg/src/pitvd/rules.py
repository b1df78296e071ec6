"""The fourteen reduction rules.

Every rule is a pure trigger scan: given the current graph (and, for the
later rules, the modulator strata), it either returns a
:class:`RuleApplication` describing the edit or ``None`` when the rule
does not apply.  The driver owns mutation, ordering and restarts; keeping
the rules side-effect free is what makes traces replayable and the
per-rule safety tests honest.

Edits are encoded as small op tuples:

    ("del", v)          delete vertex v
    ("mult", u, v, m)   force edge uv to multiplicity m (0 removes it)
    ("edge", u, v, m)   add m parallel copies of uv

Rules fire on their first trigger in a deterministic scan order (smallest
vertex / component ids first); only the hanger and marking rules batch,
since their edits are computed from a whole stratification at once.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import marking
from .cliques import CliquePath, attachment, clique_path
from .combinatorics import flower_in_forest, q_expansion
from .flows import min_vertex_separator
from .modulator import Modulator
from .multigraph import MultiGraph
from .recognition import component_clean

Op = tuple


@dataclass(frozen=True)
class RuleApplication:
    """One fired rule: its id, the edit ops, and the budget change."""

    rule: str
    ops: tuple[Op, ...]
    k_delta: int = 0
    affected: tuple[int, ...] = ()


def apply_ops(g: MultiGraph, ops) -> None:
    for op in ops:
        if op[0] == "del":
            g.delete_vertex(op[1])
        elif op[0] == "mult":
            g.set_multiplicity(op[1], op[2], op[3])
        elif op[0] == "edge":
            g.add_edge(op[1], op[2], op[3])
        else:
            raise ValueError(f"unknown op {op!r}")


def _deletion(rule: str, vs, k_delta: int = 0, affected=None) -> RuleApplication:
    vs = sorted(vs)
    return RuleApplication(rule=rule, ops=tuple(("del", v) for v in vs),
                           k_delta=k_delta,
                           affected=tuple(sorted(affected)) if affected is not None
                           else tuple(vs))


# ---------------------------------------------------------------------------
# rules on the raw graph
# ---------------------------------------------------------------------------

def rule1_drop_clean_component(g: MultiGraph, k: int):
    """Delete a whole component that is already simple and clean."""
    for comp in g.components():
        if component_clean(g, comp):
            return _deletion("1", comp)
    return None


def rule2_cap_multiplicity(g: MultiGraph, k: int):
    """Reduce the first edge with multiplicity above two down to two."""
    for u, v, m in g.edges():
        if m > 2:
            return RuleApplication(rule="2", ops=(("mult", u, v, 2),),
                                   affected=(u, v))
    return None


def rule3_many_double_edges(g: MultiGraph, k: int):
    """A vertex with k+1 doubled neighbors is in every solution."""
    for v in g.vertices:
        doubled = [u for u in g.neighbors(v) if g.multiplicity(v, u) >= 2]
        if len(doubled) >= k + 1:
            return _deletion("3", [v], k_delta=-1)
    return None


def rule4_trim_tail(g: MultiGraph, k: int):
    """Cut a pendant degree-2 tail down to one edge."""
    for p in g.find_degree2_paths():
        if p.kind == "tail" and len(p.vertices) >= 3:
            return _deletion("4", p.vertices[2:], affected=p.vertices)
    return None


def rule5_shrink_degree2_path(g: MultiGraph, k: int):
    """Contract a non-tail degree-2 path with >= 5 vertices to 4.

    Interior vertices go away and the two survivors next to the endpoints
    become adjacent.  Chordless cycles (pure, or hanging off a single
    anchor) run through the same edit, shrinking them towards a 4-cycle.
    """
    for p in g.find_degree2_paths():
        if p.kind == "tail" or len(p.vertices) < 5:
            continue
        vs = p.vertices
        ops = [("del", v) for v in vs[2:-2]]
        ops.append(("edge", vs[1], vs[-2], 1))
        return RuleApplication(rule="5", ops=tuple(ops), affected=vs)
    return None


def pendant_trees_at(g: MultiGraph, x: int) -> list[list[int]]:
    """Tree components of (component of x) - x linked back by one plain edge."""
    comp = set(g.component_of(x))
    comp.discard(x)
    if not comp:
        return []
    sub = g.induced(comp)
    pieces = sub.components()
    if len(pieces) < 2:  # x is not a cut vertex
        return []
    out = []
    for piece in pieces:
        if not sub.is_tree(piece):
            continue
        links = [u for u in piece if g.has_edge(x, u)]
        if len(links) == 1 and g.multiplicity(x, links[0]) == 1:
            out.append(piece)
    return out


def rule6_prune_pendant_tree(g: MultiGraph, k: int):
    """Replace a branching pendant tree by its nearest claw.

    Keeps the path from the attachment vertex to the closest vertex of
    degree >= 3 plus two of that vertex's other neighbors (smallest ids);
    the rest of the pendant tree goes.
    """
    for x in g.vertices:
        for piece in pendant_trees_at(g, x):
            if all(g.degree(v) < 3 for v in piece):
                continue
            parent = {x: None}
            frontier = [x]
            v = None
            while v is None:
                nxt = []
                for u in frontier:
                    for w in g.neighbors(u):
                        if w in parent or w not in piece:
                            continue
                        parent[w] = u
                        nxt.append(w)
                found = [w for w in nxt if g.degree(w) >= 3]
                assert len(found) <= 1, "nearest branching vertex is unique"
                if found:
                    v = found[0]
                frontier = nxt
            keep = set()
            cur = v
            while cur is not None:
                keep.add(cur)
                cur = parent[cur]
            extra = [w for w in g.neighbors(v) if w in piece and w not in keep]
            keep.update(extra[:2])
            drop = [u for u in piece if u not in keep]
            if drop:
                return _deletion("6", drop, affected=[x] + sorted(piece))
    return None


def rule7_limit_pendant_trees(g: MultiGraph, k: int):
    """Keep at most three pendant trees per attachment vertex."""
    for x in g.vertices:
        trees = pendant_trees_at(g, x)
        if len(trees) >= 4:
            trees.sort(key=min)
            drop = [u for t in trees[3:] for u in t]
            return _deletion("7", drop, affected=[x] + drop)
    return None


# ---------------------------------------------------------------------------
# rules using the modulator
# ---------------------------------------------------------------------------

def rule8_remove_bad_hangers(g: MultiGraph, k: int, mod: Modulator):
    """Delete every hanger of every bad hook."""
    drop = sorted({u for w in mod.bad_hooks
                   for c in mod.hangers[w] for u in c})
    if not drop:
        return None
    return _deletion("8", drop, affected=sorted(mod.bad_hooks) + drop)


def tree_side_flower(g: MultiGraph, v: int, mod: Modulator):
    """Largest packing of cycles through v into the tree side, plus a
    same-size hub-avoiding cover of all such cycles."""
    fl = flower_in_forest(g, v, sorted(mod.v2))
    return fl.order, sorted(fl.cover)


def rule9_flower(g: MultiGraph, k: int, mod: Modulator):
    """A base vertex with 4k+3 disjoint cycles into the tree side is in
    every solution."""
    for v in sorted(mod.s):
        order, _ = tree_side_flower(g, v, mod)
        if order >= 4 * k + 3:
            return _deletion("9", [v], k_delta=-1)
    return None


def rule10_rewire_expansion(g: MultiGraph, k: int, mod: Modulator):
    """Rewire a base vertex with a huge number of edges to the tree side.

    With v's cycle cover Z_v removed, the tree-side components touching v
    each do so by exactly one plain edge; matched against Z_v + (S - v), a
    5-expansion pins a set A that every solution avoiding v must contain.
    The edit drops v's contacts into the matched components and doubles
    v's edges onto A, which preserves the answer and shrinks the graph.
    """
    for v in sorted(mod.s):
        order, z_v = tree_side_flower(g, v, mod)
        assert order <= 4 * k + 2, "flower rule must fire before this one"
        assert len(z_v) <= 8 * k + 4
        deg = sum(g.multiplicity(v, u) for u in g.neighbors(v) if u in mod.v2)
        if deg < 7 * (len(mod.s) + len(z_v)) + 5:
            continue
        sub = g.induced([u for u in mod.v2 if u not in z_v])
        left = sorted((set(z_v) | mod.s) - {v})
        comps = {}      # component label -> vertex set
        contact = {}    # component label -> the one neighbor of v inside
        nbrs = {}       # component label -> left-side neighbors
        for comp in sub.components():
            touched = [u for u in comp if g.has_edge(v, u)]
            if not touched:
                continue
            assert len(touched) == 1 and g.multiplicity(v, touched[0]) == 1, \
                "a second contact would be a cycle missed by the cover"
            label = comp[0]
            comps[label] = set(comp)
            contact[label] = touched[0]
            nbrs[label] = [z for z in left
                           if any(g.has_edge(z, u) for u in comp)]
        assert len(comps) >= 5 * (len(mod.s) + len(z_v)) + 5, \
            "the degree bound must force this many contact components"
        a_set, b_set, match = q_expansion(left, sorted(comps), nbrs, 5)
        assert a_set, "expansion side A may not be empty at this size"
        saturated = {lbl for partners in match.values() for lbl in partners}
        assert saturated <= b_set
        assert len(b_set) - len(saturated) >= 5
        for lbl in sorted(b_set):
            outside = {w for u in comps[lbl] for w in g.neighbors(u)} - comps[lbl]
            assert outside <= set(a_set) | {v}, \
                "expansion components may only reach A and v"
        ops = [("mult", v, contact[lbl], 0) for lbl in sorted(saturated)]
        ops += [("mult", v, a, 2) for a in sorted(a_set)]
        return RuleApplication(rule="10", ops=tuple(ops),
                               affected=(v,) + tuple(sorted(a_set)))
    return None


def rule11_delete_expansion_side(g: MultiGraph, k: int, mod: Modulator):
    """Many cyclic components force part of the base set into the solution."""
    if not mod.v1:
        return None
    sub = g.induced(sorted(mod.v1))
    comps = {c[0]: c for c in sub.components()}
    if len(comps) < 3 * len(mod.s):
        return None
    nbrs = {}
    for label, comp in comps.items():
        touching = [s for s in sorted(mod.s)
                    if any(g.has_edge(s, u) for u in comp)]
        assert touching, "a stranded cyclic part would be a clean component"
        nbrs[label] = touching
    s_hat, _, _ = q_expansion(sorted(mod.s), sorted(comps), nbrs, 3)
    assert s_hat, "expansion of a nonempty base set cannot vanish"
    return _deletion("11", sorted(s_hat), k_delta=-len(s_hat))


def _v1_paths(g: MultiGraph, mod: Modulator) -> list[CliquePath]:
    if not mod.v1:
        return []
    sub = g.induced(sorted(mod.v1))
    return [clique_path(g, comp) for comp in sub.components()]


def rule12_many_cliques_neighbor(g: MultiGraph, k: int, mod: Modulator):
    """A base vertex adjacent to 6k+5 cliques of one component must go."""
    paths = _v1_paths(g, mod)
    for v in sorted(mod.s):
        nbr = set(g.neighbors(v))
        for path in paths:
            hit = sum(1 for kq in path.cliques if nbr.intersection(kq))
            if hit >= 6 * k + 5:
                return _deletion("12", [v], k_delta=-1)
    return None


def rule13_bypass_clique(g: MultiGraph, k: int, mod: Modulator):
    """Shortcut one clique inside a long run of cliques unseen by the base set.

    Inside a window of 14k+5 consecutive base-set-free cliques, take the
    clique 7k in (first vertex x) and the one five later (first vertex y).
    A minimum x-y separator of the component is a clique of it, so it
    meets at most two consecutive partition cliques and must miss one of
    the three strictly between; that clique is deleted and its attachment
    sets in the two flanking cliques get joined.
    """
    ns = {u for s in mod.s for u in g.neighbors(s)}
    span = 14 * k + 5
    for path in _v1_paths(g, mod):
        last = len(path.cliques) - 1
        run = 0
        for j, kq in enumerate(path.cliques):
            run = run + 1 if not ns.intersection(kq) else 0
            i = j - span + 1 + 7 * k
            if run < span or i + 5 > last:
                continue
            x = path.cliques[i][0]
            y = path.cliques[i + 5][0]
            comp = sorted(v for blk in path.cliques for v in blk)
            sep = set(min_vertex_separator(g.induced(comp), x, y))
            ell = next(e for e in (i + 1, i + 2, i + 3)
                       if not sep.intersection(path.cliques[e]))
            mid = path.cliques[ell]
            flank_a = attachment(g, path.cliques[ell - 1], mid)
            flank_b = attachment(g, path.cliques[ell + 1], mid)
            assert not any(g.has_edge(a, b) for a in flank_a for b in flank_b), \
                "flanking cliques of a partition are never adjacent"
            ops = [("del", v) for v in sorted(mid)]
            ops += [("edge", a, b, 1) for a in flank_a for b in flank_b]
            return RuleApplication(rule="13", ops=tuple(ops),
                                   affected=tuple(sorted(mid)))
    return None


def rule14_delete_unmarked(g: MultiGraph, k: int, mod: Modulator):
    """Delete every clique vertex the marking scan leaves unmarked."""
    drop: list[int] = []
    for path in _v1_paths(g, mod):
        drop.extend(marking.unmarked_vertices(g, k, mod.s, path))
    if not drop:
        return None
    return _deletion("14", sorted(drop))


#: scan order: (rule id, needs-modulator, trigger function)
RULES = (
    ("1", False, rule1_drop_clean_component),
    ("2", False, rule2_cap_multiplicity),
    ("3", False, rule3_many_double_edges),
    ("4", False, rule4_trim_tail),
    ("5", False, rule5_shrink_degree2_path),
    ("6", False, rule6_prune_pendant_tree),
    ("7", False, rule7_limit_pendant_trees),
    ("8", True, rule8_remove_bad_hangers),
    ("9", True, rule9_flower),
    ("10", True, rule10_rewire_expansion),
    ("11", True, rule11_delete_expansion_side),
    ("12", True, rule12_many_cliques_neighbor),
    ("13", True, rule13_bypass_clique),
    ("14", True, rule14_delete_unmarked),
)
