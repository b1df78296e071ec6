"""Fixpoint driver for the reduction rules.

Applies the rules in order, restarting from the first after every hit, so
a rule only ever fires with all earlier ones exhausted.  The later rules
need a base set (vertices whose removal leaves every component a proper
interval graph or a tree); the driver computes one lazily when a pass
first reaches those rules, prunes it after deletions, and recomputes it
only when an edit broke it.  Every application strictly shrinks the
triple (budget, vertex count, edge count) in lexicographic order, which
is asserted and is what guarantees termination.

The full run is recorded as a trace of rule applications; replaying a
trace against the original graph reproduces the kernel bit for bit.
Base-set (re)computations appear in the trace as op-free entries so a
reader can see which vertices the structural rules were working against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import DEFAULT_NODE_LIMIT
from .modulator import classify_tree_side, compute_base_set
from .multigraph import MultiGraph
from .recognition import is_pitg
from .rules import RULES, RuleApplication, apply_ops


@dataclass(frozen=True)
class KernelInstance:
    """Result of running the pipeline to fixpoint.

    ``decided_no`` marks instances rejected outright: the budget went
    negative, or the bootstrap search proved that no solution fits.  The
    graph and budget then hold the state at the moment of rejection and
    carry no further meaning.
    """

    graph: MultiGraph
    k: int
    trace: tuple[RuleApplication, ...]
    decided_no: bool = False


def replay(original: MultiGraph, k: int, trace) -> tuple[MultiGraph, int]:
    """Re-run a recorded trace against the graph it was recorded on."""
    g = original.copy()
    for app in trace:
        apply_ops(g, app.ops)
        k += app.k_delta
    return g, k


def kernelize(g: MultiGraph, k: int,
              node_limit: int = DEFAULT_NODE_LIMIT,
              rules: tuple = RULES) -> KernelInstance:
    """Reduce (g, k) to an equivalent instance no rule applies to.

    ``rules`` defaults to the full ordered battery; passing a prefix
    stops the fixpoint early (handy for exercising one rule in
    isolation), and the mutation harness passes deliberately broken
    batteries to check that the test suites notice.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    g = g.copy()
    trace: list[RuleApplication] = []
    s: set[int] | None = None
    fallback = False

    while True:
        mod = None
        fired = False
        for _rule_id, needs_mod, fn in rules:
            if needs_mod:
                if mod is None:
                    if s is not None:
                        s = {v for v in s if g.has_vertex(v)}
                        rest = [v for v in g.vertices if v not in s]
                        if not is_pitg(g.induced(rest))[0]:
                            s = None
                    if s is None:
                        s, fallback = compute_base_set(g, k, node_limit)
                        if s is None:
                            return KernelInstance(g, k, tuple(trace), True)
                        trace.append(RuleApplication(
                            rule="base-set", ops=(),
                            affected=tuple(sorted(s))))
                    mod = classify_tree_side(g, s, fallback)
                app = fn(g, k, mod)
            else:
                app = fn(g, k)
            if app is None:
                continue
            before = (k, g.n, g.edge_count)
            apply_ops(g, app.ops)
            k += app.k_delta
            trace.append(app)
            assert (k, g.n, g.edge_count) < before, \
                "every application must shrink the instance"
            if k < 0:
                return KernelInstance(g, k, tuple(trace), True)
            fired = True
            break
        if not fired:
            return KernelInstance(g, k, tuple(trace), False)
