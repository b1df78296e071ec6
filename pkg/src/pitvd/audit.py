"""Structural audit of a fixpoint kernel.

Checks the postconditions that are supposed to hold once no rule
applies: bounded multiplicities, short tails and degree-2 stretches,
capped pendant-tree counts and sizes, hanger-free bad hooks, small
flowers, marked-size cliques, bounded base-set-free clique runs, and the
stratum cardinality bounds.  Each check reports a human-readable
violation string; an irreducible kernel reports none.

The audit recomputes the base set and strata from scratch, so it also
re-runs the whole rule battery as its final check -- a kernel a rule
still fires on is by definition not a fixpoint.
"""

from __future__ import annotations

from . import marking
from .exact import DEFAULT_NODE_LIMIT
from .modulator import classify_tree_side, compute_base_set
from .multigraph import MultiGraph
from .rules import RULES, pendant_trees_at, tree_side_flower, _v1_paths


def audit_violations(g: MultiGraph, k: int,
                     node_limit: int = DEFAULT_NODE_LIMIT) -> list[str]:
    """All irreducibility violations of (g, k); empty means the kernel is
    irreducible."""
    bad: list[str] = []

    for u, v, m in g.edges():
        if m > 2:
            bad.append(f"edge {u}-{v} has multiplicity {m} > 2")

    for v in g.vertices:
        doubled = sum(1 for u in g.neighbors(v) if g.multiplicity(v, u) >= 2)
        if doubled >= k + 1:
            bad.append(f"vertex {v} keeps {doubled} >= k+1 doubled neighbors")

    for p in g.find_degree2_paths():
        if p.kind == "tail" and len(p.vertices) >= 3:
            bad.append(f"tail {p.vertices} not cut to one edge")
        if p.kind != "tail" and len(p.vertices) >= 5:
            bad.append(f"degree-2 stretch {p.vertices} not shrunk below 5")

    for x in g.vertices:
        trees = pendant_trees_at(g, x)
        if len(trees) > 3:
            bad.append(f"vertex {x} keeps {len(trees)} > 3 pendant trees")
        for piece in trees:
            if any(g.degree(v) >= 3 for v in piece) and len(piece) > 5:
                bad.append(f"branching pendant tree at {x} keeps "
                           f"{len(piece)} > 5 vertices")

    if g.n == 0:
        return bad

    s, _ = compute_base_set(g, k, node_limit)
    if s is None:
        bad.append("no base set: the exact search rejects the kernel")
        return bad
    mod = classify_tree_side(g, s, False)

    for w in sorted(mod.bad_hooks):
        if mod.hangers.get(w):
            bad.append(f"bad hook {w} still carries hangers")

    for v in sorted(mod.s):
        order, _ = tree_side_flower(g, v, mod)
        if order >= 4 * k + 3:
            bad.append(f"base vertex {v} keeps a flower of order {order} "
                       f">= 4k+3")

    cap = marking.eta(k, len(mod.s))
    ns = {u for x in mod.s for u in g.neighbors(x)}
    for path in _v1_paths(g, mod):
        for kq in path.cliques:
            if len(kq) > cap:
                bad.append(f"clique of size {len(kq)} exceeds eta = {cap}")
        run = best = 0
        for kq in path.cliques:
            run = run + 1 if not ns.intersection(kq) else 0
            best = max(best, run)
        if best > 14 * k + 5:
            bad.append(f"base-set-free clique run of length {best} "
                       f"> 14k+5 = {14 * k + 5}")

    if mod.v2 and not mod.f1:
        bad.append("tree side nonempty but none of it touches the base set")
    if mod.f1 and len(mod.v2) > 108 * len(mod.f1) - 53:
        bad.append(f"tree side has {len(mod.v2)} vertices > "
                   f"108|F1|-53 = {108 * len(mod.f1) - 53}")
    f1_cap = len(mod.s) * (7 * (len(mod.s) + 8 * k + 4) + 4)
    if len(mod.f1) > f1_cap:
        bad.append(f"|F1| = {len(mod.f1)} exceeds {f1_cap}")

    for rule_id, needs_mod, fn in RULES:
        app = fn(g, k, mod) if needs_mod else fn(g, k)
        if app is not None:
            bad.append(f"rule {rule_id} still applies")

    return bad
