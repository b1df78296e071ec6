"""Exact decision of the deletion problem by bounded branching.

``decide(G, k)`` finds a deletion set of size at most k whose removal
leaves a simple graph with every component a proper interval graph or a
tree, or proves none exists.  Branching is driven by the certifying
recognizer: parallel edges, nets, tents and holes must each lose one of
their own vertices, giving a bounded branch; a component rejected only for
hosting both a claw and a triangle must lose *some* vertex, so the branch
ranges over that component.  Memoization collapses permutations of the
same deletions.

This is exponential and guarded by an explicit node budget; it serves as
the bootstrap for the modulator and as the correctness oracle for the
reduction pipeline, not as a general-purpose solver.
"""

from __future__ import annotations

from . import recognition as rec
from .multigraph import MultiGraph

DEFAULT_NODE_LIMIT = 400_000


class SearchLimitExceeded(RuntimeError):
    """The branching search outgrew its node budget; no verdict."""


def decide(g: MultiGraph, k: int,
           node_limit: int = DEFAULT_NODE_LIMIT) -> list[int] | None:
    """A deletion set of size <= k (sorted ids), or None if none exists."""
    if k < 0:
        return None
    memo: dict = {}
    nodes = 0

    def rec_solve(h: MultiGraph, kk: int):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise SearchLimitExceeded(
                f"exact search exceeded {node_limit} nodes")
        key = (tuple(h.edges()), kk)
        if key in memo:
            return memo[key]
        ok, obs = rec.is_pitg(h)
        if ok:
            return []
        if kk == 0:
            memo[key] = None
            return None
        if isinstance(obs, rec.ClawTrianglePair):
            # the whole component is bad; some vertex of it must go
            cands = sorted(h.component_of(obs.claw[0]))
        else:
            cands = sorted(set(obs.vertices))
        sol = None
        for v in cands:
            h2 = h.copy()
            h2.delete_vertex(v)
            sub = rec_solve(h2, kk - 1)
            if sub is not None:
                sol = sorted([v, *sub])
                break
        memo[key] = sol
        return sol

    out = rec_solve(g, k)
    if out is not None:
        assert len(out) <= k
        left = g.copy()
        left.delete_vertices(out)
        ok, _ = rec.is_pitg(left)
        assert ok, "solver returned an invalid deletion set"
    return out


def minimum_deletion(g: MultiGraph,
                     node_limit: int = DEFAULT_NODE_LIMIT) -> tuple[int, list[int]]:
    """Smallest deletion set, by deepening k.  (size, vertex ids)."""
    for k in range(g.n + 1):
        sol = decide(g, k, node_limit=node_limit)
        if sol is not None:
            return k, sol
    raise AssertionError("deleting every vertex always succeeds")
