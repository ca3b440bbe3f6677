"""Compare the compiled geometry kernel against the pure-Python fallback.

Runs the micro-predicates on a fixed workload and one macro workload
(first-ring pattern enumeration), printing wall times for both kernels.
The macro run re-executes this script in a subprocess with
SHIELDTILES_PURE=1 so the import-time kernel selection is exercised.

Usage: python benchmarks/bench_kernels.py [--macro]
"""

from __future__ import annotations

import argparse
import math
import os
import random
import subprocess
import sys
import time

from shieldtiles import _puregeom

try:
    from shieldtiles import _fastgeom
except ImportError:
    _fastgeom = None


def _polygons(count: int, rng: random.Random):
    polys = []
    for _ in range(count):
        cx, cy = rng.uniform(-3, 3), rng.uniform(-3, 3)
        rot = rng.uniform(0, 2 * math.pi)
        n = rng.choice((3, 6))
        pts = []
        for i in range(n):
            t = rot + 2 * math.pi * i / n
            pts.extend((cx + math.cos(t), cy + math.sin(t)))
        polys.append(tuple(pts))
    return polys


def bench_micro(mod, polys, reps: int) -> float:
    tol = 1e-6
    t0 = time.perf_counter()
    for _ in range(reps):
        for i in range(0, len(polys) - 1, 2):
            a, b = polys[i], polys[i + 1]
            mod.convex_overlap(a, b, tol)
            mod.poly_point_dist(a, b[0], b[1])
            mod.point_in_convex(a, b[0], b[1], tol)
            mod.point_segment_dist(b[0], b[1], a[0], a[1], a[2], a[3])
    return time.perf_counter() - t0


def bench_macro() -> float:
    from shieldtiles import GENERIC, count_patterns

    t0 = time.perf_counter()
    count_patterns(0.1, GENERIC, keep=False)
    return time.perf_counter() - t0


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--macro", action="store_true",
                    help="also time first-ring enumeration per kernel")
    ap.add_argument("--_macro-child", action="store_true",
                    help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args._macro_child:
        from shieldtiles.geomkernel import IMPL

        dt = bench_macro()
        print(f"macro  enumerate P_0.1  {IMPL:>8}: {dt:8.3f} s")
        return 0

    rng = random.Random(20240817)
    polys = _polygons(2000, rng)
    reps = 50
    t_pure = bench_micro(_puregeom, polys, reps)
    print(f"micro  {4 * reps * len(polys) // 2} predicate calls")
    print(f"  pure    : {t_pure:8.3f} s")
    if _fastgeom is None:
        print("  compiled: not built")
    else:
        t_fast = bench_micro(_fastgeom, polys, reps)
        print(f"  compiled: {t_fast:8.3f} s  ({t_pure / t_fast:4.1f}x)")
        for i in range(0, len(polys) - 1, 2):
            a, b = polys[i], polys[i + 1]
            assert _fastgeom.convex_overlap(a, b, 1e-6) == \
                _puregeom.convex_overlap(a, b, 1e-6)

    if args.macro:
        sys.stdout.flush()
        for env_val in ("", "1"):
            env = dict(os.environ)
            if env_val:
                env["SHIELDTILES_PURE"] = env_val
            else:
                env.pop("SHIELDTILES_PURE", None)
            subprocess.run(
                [sys.executable, __file__, "--_macro-child"],
                env=env,
                check=True,
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
