"""Compare the compiled and pure-Python echelon kernels.

Two workloads: random dense Gaussian-integer systems fed straight to the
kernel, and the full orbit sweep (p <= q <= 3) end to end.  The sweep runs in
a subprocess per backend because the kernel is chosen at import time.

    python3 benchmarks/bench_kernel.py [--repeat 3]
"""
import argparse
import os
import random
import subprocess
import sys
import time

from crkit.exact import _echelon_py

try:
    from crkit.exact import _echelon_c
except ImportError:
    _echelon_c = None

SWEEP = """
import time
from crkit.grassmann import enumerate_orbits, orbit_report
from crkit.exact import BACKEND
t = time.perf_counter()
for p in range(1, 4):
    for q in range(p, 4):
        for m in range(1, p + q):
            for d in enumerate_orbits(p, q, m):
                orbit_report(d)
print(BACKEND, time.perf_counter() - t)
"""


def random_rows(n_rows, n_cols, density, seed):
    rng = random.Random(seed)
    rows = []
    for _ in range(n_rows):
        row = {}
        for c in range(n_cols):
            if rng.random() < density:
                v = (rng.randint(-3, 3), rng.randint(-3, 3))
                if v != (0, 0):
                    row[c] = v
        rows.append(row)
    return rows


def bench_kernel(mod, rows, n_cols, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        ech = mod.Echelon(n_cols)
        for r in rows:
            ech.insert(dict(r))
        best = min(best, time.perf_counter() - t)
    return best, ech.rank


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mods = [_echelon_py] + ([_echelon_c] if _echelon_c else [])
    print(f"{'workload':<28}{'backend':<10}{'seconds':>10}")
    for n_rows, n_cols, dens in ((40, 40, 0.3), (60, 120, 0.1), (25, 25, 1.0)):
        rows = random_rows(n_rows, n_cols, dens, seed=n_rows)
        ranks = set()
        for mod in mods:
            t, rank = bench_kernel(mod, rows, n_cols, args.repeat)
            ranks.add(rank)
            print(f"{f'random {n_rows}x{n_cols} d={dens}':<28}{mod.BACKEND:<10}{t:>10.4f}")
        assert len(ranks) == 1, "backends disagree on rank"
    for pure in ("1", "0"):
        env = dict(os.environ, CRKIT_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
        backend, secs = out.stdout.split()
        print(f"{'orbit sweep p<=q<=3':<28}{backend:<10}{float(secs):>10.4f}")


if __name__ == "__main__":
    main()
