"""Compare the numba and numpy kernel backends on representative work.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--skip-numba]

Each workload builds fresh objects inside the timed loop (ideals cache
their bases, so reusing them would time the cache). The numba backend
gets one untimed warm-up pass so compilation does not pollute the
numbers; on-disk caching makes later runs start fast anyway.
"""

import argparse
import time

import numpy as np

from fstable import CISetup, Ideal, Ring, kernels, pool_linear

P7 = Ring(7, ("x", "y", "z", "w"))
P2 = Ring(2, ("x", "y", "z"))

CONE_U = "x^3 + y^3 + z^3 + x*y*z"
CONE_D = ("x^2 + y*z", "x*y + z^2", "x^2 + x*y + x*z")
CONE_E = ("y^2 + x*z", "x*y + z^2", "y^2 + x*y + y*z")


def work_products():
    rng = np.random.default_rng(11)
    polys = []
    for _ in range(40):
        exps = rng.integers(0, 6, size=(25, 4))
        coeffs = rng.integers(1, 7, size=25)
        polys.append(P7.make_poly(exps, coeffs))
    acc = P7.zero()
    for f in polys:
        for g in polys[:10]:
            acc = acc + f * g
    return acc.nterms()


def work_groebner():
    gens = ("x^3 + y*w", "y^3 + z*w", "z^3 + x*w", "w^3 + x*y*z")
    return len(Ideal(P7, gens).groebner())


def work_intersection():
    meet = Ideal(P2, CONE_D).intersect(Ideal(P2, CONE_E))
    return len(meet.groebner())


def work_test_ideal():
    setup = CISetup(P2, (CONE_U,))
    pool = list(pool_linear(P2)) + [P2.parse("x^2 + y^2 + z^2 + x*y + x*z + y*z")]
    return len(setup.parameter_test_ideal(pool, "linear+q").ideal.gens)


WORKLOADS = [
    ("term products (p=7, 4 vars)", work_products),
    ("Groebner basis (p=7, 4 vars)", work_groebner),
    ("ideal intersection (p=2)", work_intersection),
    ("parameter test ideal (p=2)", work_test_ideal),
]


def run_backend(name, repeat):
    kernels.use_backend(name)
    times = {}
    for label, fn in WORKLOADS:
        fn()  # warm-up: jit compilation and any lazy setup
        best = min(measure(fn) for _ in range(repeat))
        times[label] = best
    return times


def measure(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed repetitions per workload (best is kept)")
    parser.add_argument("--skip-numba", action="store_true",
                        help="only run the numpy backend")
    args = parser.parse_args()

    backends = ["numpy"]
    if not args.skip_numba and "numba" in kernels.available_backends():
        backends.append("numba")

    results = {name: run_backend(name, args.repeat) for name in backends}

    width = max(len(label) for label, _ in WORKLOADS)
    header = f"{'workload':<{width}}" + "".join(f"  {b:>10}" for b in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, _ in WORKLOADS:
        row = f"{label:<{width}}"
        for b in backends:
            row += f"  {results[b][label] * 1000:>8.1f}ms"
        if len(backends) == 2:
            ratio = results["numpy"][label] / results["numba"][label]
            row += f"  {ratio:>7.2f}x"
        print(row)


if __name__ == "__main__":
    main()
