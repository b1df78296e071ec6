"""Marking scheme that bounds how large any clique of a long component stays.

Every clique K of a clique path gets a budget-bounded set of marked
vertices; the final reduction rule deletes whatever stays unmarked.  Marks
come in four groups:

1. adjacency signatures: for every subset Z of the base set with at most
   three vertices (the empty one included) and every in/out pattern f on
   Z, the first and last ``k + 3`` vertices of K matching (Z, f);
2. common neighbors: for base vertices x and selected non-neighbors y of x
   in the previous (next) clique, the last (first) ``k + 3`` vertices of K
   adjacent to both;
3. one-sided neighbors of the selector: for selected neighbors y of x in
   the previous (next) clique, the last (first) ``k + 3`` vertices of K
   adjacent to y but not x;
4. one-sided neighbors of x: for selected neighbors of x in the previous
   (next) clique, extremal vertices of K adjacent to x but not to the
   selector.

"First"/"last" always refer to the umbrella order of the component.  Two
selector widths are deliberately uneven (group 3 takes ``k + 3`` next-side
selectors, group 4 marks only ``k + 1`` vertices on the previous side);
``eta`` absorbs that with a small additive slack.  When a pool holds fewer
vertices than a width asks for, the whole pool is used.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .cliques import CliquePath
from .multigraph import MultiGraph


def eta(k: int, s_size: int) -> int:
    """Upper bound on the number of marked vertices in one clique."""
    signatures = sum(2 ** i * comb(s_size, i) for i in range(4))
    return 2 * (k + 3) * signatures + 6 * s_size * (k + 1) * (k + 3) + 4 * s_size


def _first(pool, width):
    return pool[:width]


def _last(pool, width):
    return pool[-width:] if width else []


def mark_clique(g: MultiGraph, k: int, s, path: CliquePath, idx: int) -> set[int]:
    """Marked vertices of clique ``idx`` of the partition ``path``."""
    kq = path.cliques[idx]
    prv = path.cliques[idx - 1] if idx > 0 else None
    nxt = path.cliques[idx + 1] if idx + 1 < len(path.cliques) else None
    s_list = sorted(s)
    adj = g.has_edge
    marked: set[int] = set()

    for size in range(4):
        for z in combinations(s_list, size):
            for bits in range(1 << size):
                pool = [v for v in kq
                        if all(adj(v, z[i]) == bool(bits >> i & 1)
                               for i in range(size))]
                take = min(k + 3, len(pool))
                marked.update(pool[:take])
                marked.update(pool[len(pool) - take:])

    for x in s_list:
        if prv is not None:
            out_pv = [y for y in prv if not adj(x, y)]
            in_pv = [y for y in prv if adj(x, y)]
            for y in _last(out_pv, k + 1):
                marked.update(_last([v for v in kq if adj(v, x) and adj(v, y)],
                                    k + 3))
            for y in _last(in_pv, k + 1):
                marked.update(_last([v for v in kq if adj(v, y) and not adj(v, x)],
                                    k + 3))
            for y in _first(in_pv, k + 1):
                marked.update(_first([v for v in kq if adj(v, x) and not adj(v, y)],
                                     k + 1))
        if nxt is not None:
            out_nt = [z for z in nxt if not adj(x, z)]
            in_nt = [z for z in nxt if adj(x, z)]
            for z in _first(out_nt, k + 1):
                marked.update(_first([v for v in kq if adj(v, x) and adj(v, z)],
                                     k + 3))
            for z in _first(in_nt, k + 3):
                marked.update(_first([v for v in kq if adj(v, z) and not adj(v, x)],
                                     k + 3))
            for z in _last(in_nt, k + 1):
                marked.update(_last([v for v in kq if adj(v, x) and not adj(v, z)],
                                    k + 3))

    assert len(marked) <= eta(k, len(s_list)), "mark budget exceeded"
    return marked


def unmarked_vertices(g: MultiGraph, k: int, s, path: CliquePath) -> list[int]:
    """All vertices of the component left unmarked by every clique's scan."""
    out: list[int] = []
    for idx, kq in enumerate(path.cliques):
        keep = mark_clique(g, k, s, path, idx)
        out.extend(v for v in kq if v not in keep)
    return sorted(out)
