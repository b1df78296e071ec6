#!/usr/bin/env python3
"""Compare the compiled and pure-Python bitmask kernels.

Times the hot primitives (component sweep, obstruction scans, full
clean-component check) on identical random inputs with both backends and
prints per-call microseconds plus the speedup.  Results are checked for
agreement while timing, so a drifting extension shows up here before it
shows up as a wrong kernel.

Run from the repository root:

    python3 benchmarks/bench_backends.py [--seed N] [--rounds N]
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from pitvd import _bitcore as py

try:
    from pitvd import _bitcore_c as c
except ImportError:
    sys.exit("compiled backend not built; run pip install -e . first")


def random_adj(rng: random.Random, n: int, p: float) -> list[int]:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


CASES = [
    ("comp_masks", lambda m, adj, mask: m.comp_masks(adj, mask)),
    ("find_triangle", lambda m, adj, mask: m.find_triangle(adj, mask)),
    ("find_claw", lambda m, adj, mask: m.find_claw(adj, mask)),
    ("chordal_fail", lambda m, adj, mask: m.chordal_fail(adj, mask)),
    ("small_cycles", lambda m, adj, mask: m.small_cycles(adj, mask, False)),
    ("net_tent", lambda m, adj, mask: m.net_tent_witnesses(adj, mask, False)),
    ("pitg_ok", lambda m, adj, mask: m.pitg_ok(adj, mask)),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--rounds", type=int, default=200,
                    help="timed calls per (case, graph) pair (default 200)")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    graphs = [(n, p, random_adj(rng, n, p))
              for n in (16, 32, 48, 63)
              for p in (0.2, 0.5)]

    print(f"{'case':<14} {'n':>3} {'p':>4} {'python':>10} {'compiled':>10} "
          f"{'speedup':>8}")
    for name, fn in CASES:
        for n, p, adj in graphs:
            mask = (1 << n) - 1
            got_py = fn(py, adj, mask)
            got_c = fn(c, adj, mask)
            if got_py != got_c:
                sys.exit(f"backend disagreement in {name} (n={n}, p={p}): "
                         f"{got_py!r} != {got_c!r}")
            times = {}
            for label, mod in (("python", py), ("compiled", c)):
                t0 = time.perf_counter()
                for _ in range(args.rounds):
                    fn(mod, adj, mask)
                times[label] = (time.perf_counter() - t0) / args.rounds
            ratio = times["python"] / times["compiled"]
            print(f"{name:<14} {n:>3} {p:>4.1f} "
                  f"{times['python'] * 1e6:>8.1f}us "
                  f"{times['compiled'] * 1e6:>8.1f}us "
                  f"{ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
