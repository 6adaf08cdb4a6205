"""Compare the compiled and pure-Python polynomial kernels.

Two measurements:

* raw ``mul_terms`` / ``add_terms`` on dense packed-monomial dicts, per backend;
* an end-to-end ``run_suite`` in a fresh interpreter, with and without
  ``RWHITNEY_PURE=1``.

Usage: python3 benchmarks/bench_kernels.py [--degree D] [--repeat R] [--nmax N]
"""

import argparse
import os
import subprocess
import sys
import timeit

from rwhitney.kernels import available_backends
from rwhitney.poly import MPoly, q, r, s


def dense_terms(degree: int, offset: int) -> dict:
    # (1 + q + r + s)^degree with small integer coefficients
    base = MPoly.const(1) + q + r + s * offset
    poly = base**degree
    return dict(poly._nums)


def bench_kernels(degree: int, repeat: int) -> None:
    a = dense_terms(degree, 1)
    b = dense_terms(degree, 2)
    print(f"operands: {len(a)} x {len(b)} terms")
    results = {}
    for name, mod in sorted(available_backends().items()):
        mul = min(timeit.repeat(lambda: mod.mul_terms(a, b), number=1, repeat=repeat))
        add = min(timeit.repeat(lambda: mod.add_terms(a, 3, b, -5), number=20, repeat=repeat)) / 20
        results[name] = (mul, add)
        print(f"  {name:9} mul {mul:8.4f}s   add {add * 1e3:8.3f}ms")
    if len(results) == 2:
        (pm, pa), (cm, ca) = results["python"], results["compiled"]
        print(f"  speedup   mul {pm / cm:6.1f}x   add {pa / ca:6.1f}x")


SUITE = "import time, rwhitney; t = time.perf_counter(); rwhitney.run_suite({n}, 1); print(time.perf_counter() - t)"


def bench_suite(n_max: int) -> None:
    print(f"run_suite(nmax={n_max}) in a fresh interpreter")
    for label, pure in (("compiled", "0"), ("python", "1")):
        env = dict(os.environ, RWHITNEY_PURE=pure)
        out = subprocess.run(
            [sys.executable, "-c", SUITE.format(n=n_max)], env=env, capture_output=True, text=True, check=True
        )
        print(f"  {label:9} {float(out.stdout):8.3f}s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degree", type=int, default=12)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--nmax", type=int, default=16)
    args = parser.parse_args()
    if "compiled" not in available_backends():
        print("compiled backend not built; only the pure-Python numbers are shown")
    bench_kernels(args.degree, args.repeat)
    bench_suite(args.nmax)


if __name__ == "__main__":
    main()
