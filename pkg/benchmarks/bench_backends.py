#!/usr/bin/env python3
"""Benchmark the compiled finite-field kernels against the pure-Python fallback.

Each workload runs in a fresh subprocess with SEXTICLAB_BACKEND forced, since
the backend is chosen at import time.  Usage:

    python benchmarks/bench_backends.py            # compare both backends
    python benchmarks/bench_backends.py --repeat 3
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _bench_factor_modp() -> tuple[int, float]:
    import random

    from sexticlab.polymodp import ModPoly, factor_modp

    rng = random.Random(1)
    polys = []
    for _ in range(3000):
        p = rng.choice([2, 3, 5, 13, 101, 1009])
        deg = rng.randrange(1, 9)
        polys.append(ModPoly(p, [rng.randrange(p) for _ in range(deg)] + [1]))
    start = time.perf_counter()
    for u in polys:
        factor_modp(u)
    return len(polys), time.perf_counter() - start


def _bench_irreducibility() -> tuple[int, float]:
    import random

    from sexticlab.polymodp import ModPoly, is_irreducible_modp

    rng = random.Random(2)
    polys = []
    for _ in range(6000):
        p = rng.choice([2, 3, 5, 7, 11, 13, 31, 97])
        polys.append(ModPoly(p, [rng.randrange(p) for _ in range(6)] + [1]))
    start = time.perf_counter()
    for u in polys:
        is_irreducible_modp(u)
    return len(polys), time.perf_counter() - start


def _bench_monogenic_family() -> tuple[int, float]:
    from sexticlab.monogenic import is_monogenic_generic
    from sexticlab.polyz import IntPoly

    start = time.perf_counter()
    count = 0
    for n in range(-60, 61):
        poly = IntPoly([1, 0, n * n + 2 * n + 6, 0, n * n + 5, 0, 1])
        is_monogenic_generic(poly, assume_irreducible=True)
        count += 1
    return count, time.perf_counter() - start


def _bench_grid_slice() -> tuple[int, float]:
    from sexticlab.verify import check_f1_grid

    start = time.perf_counter()
    check_f1_grid(25)
    return 51 * 51, time.perf_counter() - start


WORKLOADS = {
    "factor_modp": _bench_factor_modp,
    "sextic_irreducibility": _bench_irreducibility,
    "monogenic_family": _bench_monogenic_family,
    "certificate_grid_slice": _bench_grid_slice,
}


def _worker(name: str) -> None:
    from sexticlab.backend import backend_name

    count, seconds = WORKLOADS[name]()
    print(json.dumps({"backend": backend_name(), "items": count, "seconds": seconds}))


def _spawn(backend: str, name: str) -> dict | None:
    env = dict(os.environ, SEXTICLAB_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker", name],
        env=env,
        capture_output=True,
        text=True,
    )
    if proc.returncode != 0:
        return None
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--worker", help=argparse.SUPPRESS)
    parser.add_argument("--repeat", type=int, default=1, help="best-of-N timing")
    args = parser.parse_args()
    if args.worker:
        _worker(args.worker)
        return 0

    have_compiled = _spawn("c", "factor_modp") is not None
    backends = ["py", "c"] if have_compiled else ["py"]
    if not have_compiled:
        print("compiled kernels unavailable; timing the pure backend only\n")

    rows = []
    for name in WORKLOADS:
        timings = {}
        for backend in backends:
            best = None
            for _ in range(args.repeat):
                result = _spawn(backend, name)
                if result is None:
                    break
                if best is None or result["seconds"] < best["seconds"]:
                    best = result
            timings[backend] = best
        rows.append((name, timings))

    width = max(len(name) for name, _ in rows)
    header = f"{'workload':<{width}}  {'pure (s)':>9}"
    if have_compiled:
        header += f"  {'compiled (s)':>12}  {'speedup':>7}"
    print(header)
    print("-" * len(header))
    for name, timings in rows:
        py = timings["py"]
        line = f"{name:<{width}}  {py['seconds']:>9.3f}"
        if have_compiled and timings.get("c"):
            cy = timings["c"]
            line += f"  {cy['seconds']:>12.3f}  {py['seconds'] / cy['seconds']:>6.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
