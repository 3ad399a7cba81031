"""Benchmark the normal-form reduction kernel: numba JIT vs numpy fallback.

Two views:
  * micro: direct calls to both kernel implementations on identical random
    reduction workloads;
  * macro: a full Hilbert-oracle run (Buchberger + series) in a subprocess
    with XYREG_BACKEND forced to each backend.

Usage: python benchmarks/bench_kernels.py [--trials N]
"""

import argparse
import os
import random
import statistics
import subprocess
import sys
import time

import numpy as np

from xyreg import kernels
from xyreg.fields import PrimeField
from xyreg.groebner import GroebnerBasis
from xyreg.orders import MonomialOrder
from xyreg.poly import Polynomial
from xyreg.ring import Monomial, VariableTable


def random_workloads(rng, count, nvars=18, divisors=12, fterms=40):
    gf = PrimeField(32003)
    table = VariableTable.generic([f"v{k}" for k in range(nvars)])
    order = MonomialOrder.grevlex(nvars)

    def random_poly(terms, degree):
        seen = {}
        for _ in range(terms):
            e = np.zeros(nvars, dtype=np.int64)
            for _ in range(degree):
                e[rng.randrange(nvars)] += 1
            seen[tuple(e)] = rng.randint(1, 32002)
        return Polynomial.from_terms(
            table, gf, order,
            [(c, Monomial(np.array(e, dtype=np.int64))) for e, c in seen.items()])

    cases = []
    for _ in range(count):
        f = random_poly(fterms, 4)
        ds = []
        while len(ds) < divisors:
            d = random_poly(6, 3)
            if not d.is_zero():
                ds.append(d.monic())
        gb = GroebnerBasis(order, ds)
        cases.append((gf, order, f, gb))
    return cases


def time_kernel(fn, cases, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        for gf, order, f, gb in cases:
            d_exps, d_keys, d_coeffs, d_starts, d_leads = gb.flat_arrays()
            fn(gf, f.exps, order.keys(f.exps), f.coeffs,
               d_exps, d_keys, d_coeffs, d_starts, d_leads)
        times.append(time.perf_counter() - t0)
    return min(times)


MACRO_SNIPPET = (
    "import time\n"
    "from xyreg.pattern import selected_entries\n"
    "from xyreg.regseq import regular_oracle_hilbert\n"
    "from xyreg.fields import PrimeField\n"
    "gf = PrimeField(32003)\n"
    "t0 = time.perf_counter()\n"
    "assert regular_oracle_hilbert(selected_entries(2, field=gf))\n"
    "cold = time.perf_counter() - t0  # includes any JIT compile/cache load\n"
    "seq = selected_entries(4, field=gf)\n"
    "t1 = time.perf_counter()\n"
    "assert regular_oracle_hilbert(seq)\n"
    "print(cold); print(time.perf_counter() - t1)\n"
)


def macro_time(backend):
    """(cold n=2 run, warm n=4 run) wall times in a fresh process."""
    env = dict(os.environ, XYREG_BACKEND=backend)
    proc = subprocess.run([sys.executable, "-c", MACRO_SNIPPET],
                          env=env, capture_output=True, text=True, check=True)
    cold, warm = proc.stdout.strip().splitlines()[-2:]
    return float(cold), float(warm)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=60,
                        help="micro workload count (default 60)")
    args = parser.parse_args()

    rng = random.Random(12345)
    cases = random_workloads(rng, args.trials)

    rows = []
    numpy_micro = time_kernel(kernels.nf_numpy, cases)
    rows.append(("micro: numpy fallback", numpy_micro))
    if kernels.nf_gfp_numba is not None:
        kernels.nf_gfp_numba(*[cases[0][0], cases[0][2].exps,
                               cases[0][1].keys(cases[0][2].exps),
                               cases[0][2].coeffs,
                               *cases[0][3].flat_arrays()])  # JIT warmup
        numba_micro = time_kernel(kernels.nf_gfp_numba, cases)
        rows.append(("micro: numba kernel", numba_micro))
    else:
        numba_micro = None
        print("numba unavailable; micro comparison limited to the fallback")

    print(f"\nreduction kernel, {args.trials} random workloads "
          "(18 vars, 12 divisors):")
    for name, t in rows:
        print(f"  {name:28s} {t * 1000:9.1f} ms")
    if numba_micro:
        print(f"  micro speedup (numpy/numba)  {numpy_micro / numba_micro:9.1f}x")

    print("\nfull Hilbert-oracle runs in a fresh process "
          "(cold n=2 first, then warm n=4):")
    cold_np, warm_np = macro_time("numpy")
    print(f"  numpy fallback   cold {cold_np * 1000:8.1f} ms   "
          f"warm {warm_np * 1000:8.1f} ms")
    if numba_micro:
        cold_nb, warm_nb = macro_time("numba")
        print(f"  numba kernel     cold {cold_nb * 1000:8.1f} ms   "
              f"warm {warm_nb * 1000:8.1f} ms")
        print(f"  warm speedup (numpy/numba)  {warm_np / warm_nb:9.1f}x")
        print("  (the cold numba run pays one-time JIT compilation or "
              "on-disk cache loading)")


if __name__ == "__main__":
    main()
