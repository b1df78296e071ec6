"""Selects between the compiled and pure-Python bitmask primitive kernels.

The compiled kernel (``_bitcore_c``, Cython) stores masks in C ``uint64`` and
therefore only handles graphs with at most 63 vertex positions; the pure
module works on arbitrary Python ints.  Selection happens per call based on
``len(adj)``, so one process can mix small compiled-path calls with large
fallback calls.

Set ``PITVD_BACKEND=python`` or ``PITVD_BACKEND=compiled`` to force a side
(the latter raises if the extension is missing or the graph is too wide --
used by the parity tests and the benchmark harness).
"""

from __future__ import annotations

import os

from . import _bitcore as _py

try:
    from . import _bitcore_c as _c  # type: ignore[attr-defined]

    HAVE_COMPILED = True
except ImportError:  # extension not built; everything runs pure
    _c = None
    HAVE_COMPILED = False

COMPILED_MAX_BITS = 63

_forced = os.environ.get("PITVD_BACKEND", "").strip().lower()
if _forced not in ("", "python", "compiled"):
    raise RuntimeError(f"PITVD_BACKEND must be 'python' or 'compiled', got {_forced!r}")


def backend_name(width: int) -> str:
    """Which kernel a call with ``width`` adjacency slots would use."""
    if _forced == "python":
        return "python"
    if _forced == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("PITVD_BACKEND=compiled but the extension is not built")
        if width > COMPILED_MAX_BITS:
            raise RuntimeError(
                f"compiled backend forced but graph needs {width} bits (max {COMPILED_MAX_BITS})"
            )
        return "compiled"
    if HAVE_COMPILED and width <= COMPILED_MAX_BITS:
        return "compiled"
    return "python"


def _mod(adj):
    return _c if backend_name(len(adj)) == "compiled" else _py


bits = _py.bits


def comp_masks(adj, mask):
    return _mod(adj).comp_masks(adj, mask)


def count_edges(adj, mask):
    return _mod(adj).count_edges(adj, mask)


def find_triangle(adj, mask):
    return _mod(adj).find_triangle(adj, mask)


def find_claw(adj, mask):
    return _mod(adj).find_claw(adj, mask)


def chordal_fail(adj, mask):
    return _mod(adj).chordal_fail(adj, mask)


def net_tent_witnesses(adj, mask, find_all):
    return _mod(adj).net_tent_witnesses(adj, mask, find_all)


def small_cycles(adj, mask, find_all):
    return _mod(adj).small_cycles(adj, mask, find_all)


def umbrella_ok(adj, order):
    return _mod(adj).umbrella_ok(adj, list(order))


def pig_order_bruteforce(adj, mask):
    return _mod(adj).pig_order_bruteforce(adj, mask)


def component_ok(adj, mask):
    return _mod(adj).component_ok(adj, mask)


def pitg_ok(adj, mask):
    return _mod(adj).pitg_ok(adj, mask)
