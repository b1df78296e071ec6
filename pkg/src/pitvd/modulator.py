"""Base set and the strata of the tree side.

The kernel pipeline works relative to a *base set* S: a vertex set whose
removal leaves a simple graph where every component is a proper interval
graph or a tree.  S is assembled from two halves: the union of a
sunflower-reduced family of small obstructions (parallel pairs, short
holes, nets, tents) and a bootstrap solution found by the exact search.
When the exact search certifies that no solution within the budget
exists, the whole instance is already decided.

Relative to S, the leftover graph splits into

* ``v1`` - vertices of components that contain a cycle, and
* ``v2`` - vertices of tree components,

and the tree side refines further into strata that the later rules need:
the S-neighbors ``f1``, the connectors ``f3`` (vertices on a path between
two distinct S-neighbors inside their tree), the branch points
``f3_critical``, and the hooks - degree-2 connectors carrying pendant
subtrees ("hangers").  Along each chain of connectors between two branch
points or S-neighbors, only the outermost hooks are *good*; the hangers
of the remaining *bad* hooks are deletable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import backend
from .combinatorics import sunflower_reduce
from .exact import DEFAULT_NODE_LIMIT, SearchLimitExceeded, decide
from .multigraph import MultiGraph
from .recognition import is_pitg, obstruction_sets

#: largest vertex count of the obstructions handled by the sunflower step
SMALL_OBSTRUCTION_ARITY = 6


def small_obstruction_family(g: MultiGraph) -> list[frozenset[int]]:
    """Vertex sets of all obstructions on at most six vertices.

    Parallel edges contribute their endpoint pairs; the rest (holes of
    length 4-6, nets, tents) come from the witness scan of the underlying
    simple graph.  Larger holes and claw-plus-triangle components are
    deliberately absent: the structural rules handle those.
    """
    fam = [frozenset(e) for e in g.double_edges()]
    fam.extend(vs for _, vs in obstruction_sets(g))
    return fam


def greedy_modulator(g: MultiGraph) -> set[int]:
    """Hitting set built by deleting whole witnesses until clean.

    Fallback for instances where the exact search is too slow.  The result
    leaves a valid graph behind but carries no size guarantee.
    """
    h = g.copy()
    out: set[int] = set()
    while True:
        ok, obs = is_pitg(h)
        if ok:
            return out
        vs = set(obs.vertices)
        out |= vs
        h.delete_vertices(vs)


def compute_base_set(g: MultiGraph, k: int,
                     node_limit: int = DEFAULT_NODE_LIMIT):
    """Return ``(S, used_fallback)``, or ``(None, False)`` when the exact
    search certifies that no solution of size <= k exists.

    ``used_fallback`` is set when the bootstrap half came from the greedy
    witness deletion instead of the exact search; the size bound is then
    not guaranteed (the reductions stay safe regardless).
    """
    core = sunflower_reduce(small_obstruction_family(g), k)
    fallback = False
    try:
        boot = decide(g, k, node_limit)
    except SearchLimitExceeded:
        boot = sorted(greedy_modulator(g))
        fallback = True
    else:
        if boot is None:
            return None, False
    s: set[int] = set(boot)
    for petal in core:
        s |= petal
    if not fallback:
        arity = SMALL_OBSTRUCTION_ARITY
        cap = arity * math.factorial(arity) * (k + 1) ** arity + 7 * k
        assert len(s) <= cap, (len(s), cap)
    ok, _ = is_pitg(g.induced([v for v in g.vertices if v not in s]))
    if not ok:  # pragma: no cover - heredity of the class forbids this
        raise AssertionError("leftover graph after removing the base set is unclean")
    return s, fallback


@dataclass(frozen=True)
class Modulator:
    """Base set plus the derived strata of the current graph."""

    s: frozenset[int]
    v1: frozenset[int]
    v2: frozenset[int]
    f1: frozenset[int]
    f2: frozenset[int]
    f3: frozenset[int]
    f3_critical: frozenset[int]
    good_hooks: frozenset[int]
    bad_hooks: frozenset[int]
    #: hook vertex -> its pendant subtrees, each disjoint from the connectors
    hangers: dict[int, tuple[frozenset[int], ...]] = field(default_factory=dict)
    #: bootstrap half of S came from the greedy fallback
    fallback: bool = False

    @property
    def hooks(self) -> frozenset[int]:
        return self.good_hooks | self.bad_hooks


def _branch(h: MultiGraph, w: int, u: int) -> set[int]:
    """Vertices of the component of the tree minus ``w`` that contains ``u``."""
    seen = {u}
    queue = [u]
    while queue:
        x = queue.pop()
        for y in h.neighbors(x):
            if y != w and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def classify_tree_side(g: MultiGraph, s, fallback: bool = False) -> Modulator:
    """Compute all strata of ``g`` relative to the base set ``s``.

    Raises if removing ``s`` does not leave a clean graph (every component
    simple and a proper interval graph or a tree).
    """
    s = frozenset(s)
    rest = [v for v in g.vertices if v not in s]
    h = g.induced(rest)
    ok, witness = is_pitg(h)
    if not ok:
        raise ValueError(f"base set leaves an unclean graph, witness {witness}")

    v1: set[int] = set()
    v2: set[int] = set()
    comps = h.components()
    for comp in comps:
        (v2 if h.is_tree(comp) else v1).update(comp)
    for comp in comps:
        if comp[0] in v1:
            ids, _, adjm = g.compact(comp)
            if backend.find_triangle(adjm, (1 << len(ids)) - 1) is None:
                raise AssertionError("cyclic clean component without a triangle")

    f1 = {u for u in v2 if any(w in s for w in g.neighbors(u))}
    f2 = set(v2) - f1
    f3: set[int] = set()
    f3c: set[int] = set()
    good: set[int] = set()
    bad: set[int] = set()
    hangers: dict[int, tuple[frozenset[int], ...]] = {}

    for comp in comps:
        if comp[0] in v1:
            continue
        f1t = f1.intersection(comp)
        if len(f1t) < 2:
            continue
        # The connectors of this tree are exactly the interior of the
        # minimal subtree spanning f1t: strip non-f1t leaves to a fixpoint.
        alive = set(comp)
        deg = {u: h.degree(u) for u in comp}
        queue = [u for u in comp if deg[u] <= 1 and u not in f1t]
        while queue:
            u = queue.pop()
            if u not in alive or deg[u] > 1:
                continue
            alive.remove(u)
            for w in h.neighbors(u):
                if w in alive:
                    deg[w] -= 1
                    if deg[w] <= 1 and w not in f1t:
                        queue.append(w)
        f3t = alive - f1t
        f3 |= f3t
        sdeg = {u: sum(1 for w in h.neighbors(u) if w in alive) for u in alive}
        crit = {u for u in f3t if sdeg[u] >= 3}
        f3c |= crit

        for w in f3t - crit:
            assert sdeg[w] == 2, "connector chains must have degree 2"
            branches = []
            for u in sorted(h.neighbors(w)):
                if u in alive:
                    continue
                branch = _branch(h, w, u)
                assert not branch & alive
                branches.append(frozenset(branch))
            if branches:
                hangers[w] = tuple(branches)

        # Chains between two anchors (f1t or branch points): only the
        # outermost hook of each chain keeps its hangers.
        anchor = f1t | crit
        for a in sorted(anchor):
            for u in sorted(h.neighbors(a)):
                if u not in alive or u in anchor:
                    continue
                interior = []
                prev, cur = a, u
                while cur not in anchor:
                    interior.append(cur)
                    nxts = [w for w in h.neighbors(cur) if w in alive and w != prev]
                    assert len(nxts) == 1
                    prev, cur = cur, nxts[0]
                assert cur != a, "chain looped back in a tree"
                if cur < a:  # this chain is walked from its smaller anchor
                    continue
                chain_hooks = [w for w in interior if w in hangers]
                for i, w in enumerate(chain_hooks):
                    if i == 0 or i == len(chain_hooks) - 1:
                        good.add(w)
                    else:
                        bad.add(w)

    assert len(f3c) <= len(f1), "branch points cannot outnumber S-neighbors"
    assert set(hangers) == good | bad
    return Modulator(s=s, v1=frozenset(v1), v2=frozenset(v2),
                     f1=frozenset(f1), f2=frozenset(f2), f3=frozenset(f3),
                     f3_critical=frozenset(f3c),
                     good_hooks=frozenset(good), bad_hooks=frozenset(bad),
                     hangers=hangers, fallback=fallback)


def compute_modulator(g: MultiGraph, k: int,
                      node_limit: int = DEFAULT_NODE_LIMIT):
    """Base set plus strata in one go; ``None`` means decided-no."""
    s, fallback = compute_base_set(g, k, node_limit)
    if s is None:
        return None
    return classify_tree_side(g, s, fallback)
