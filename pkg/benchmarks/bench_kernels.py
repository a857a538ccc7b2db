"""Compare the compiled and pure-Python F_p kernels.

    python benchmarks/bench_kernels.py [--instances 300]

Times raw row reduction on random square matrices and the end-to-end
refine + verify loop on seeded random instances, once per backend.
"""

import argparse
import time

from dsrefine import FieldSpec, kernels, theorem_refine, verify_certificate
from dsrefine import _kernel_py
from dsrefine.gen import SplitMix64, random_genspec, random_instance, random_matrix


def _rref_loop(impl, mats, n, p):
    start = time.perf_counter()
    for m in mats:
        impl.rref_mod_p(m, n, p)
    return time.perf_counter() - start


def _refine_loop(count, p):
    field = FieldSpec.prime(p)
    start = time.perf_counter()
    for seed in range(count):
        inst = random_instance(random_genspec(SplitMix64(seed), field))
        assert verify_certificate(inst, theorem_refine(inst))
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--instances", type=int, default=300)
    args = parser.parse_args()

    compiled = kernels._compiled
    if compiled is None:
        print("compiled kernel not built; only the Python backend is available")
    impls = [("python", _kernel_py)] + ([("cython", compiled)] if compiled else [])

    print(f"{'workload':<28}" + "".join(f"{name:>12}" for name, _ in impls) + ("    speedup" if compiled else ""))
    for p, n, count in ((2, 24, 200), (101, 24, 200), (101, 64, 20), (65521, 128, 5)):
        mats = [random_matrix(SplitMix64(k), FieldSpec.prime(p), n, 2 * n) for k in range(count)]
        times = [_rref_loop(impl, mats, 2 * n, p) for _, impl in impls]
        row = f"rref F_{p} {n}x{2 * n} x{count}"
        print(f"{row:<28}" + "".join(f"{t:>11.3f}s" for t in times) + (f"{times[0] / times[1]:>10.1f}x" if compiled else ""))

    for p in (2, 101):
        times = []
        for name, _ in impls:
            kernels._compiled = compiled if name == "cython" else None
            times.append(_refine_loop(args.instances, p))
        kernels._compiled = compiled
        row = f"refine+verify F_{p} x{args.instances}"
        print(f"{row:<28}" + "".join(f"{t:>11.3f}s" for t in times) + (f"{times[0] / times[1]:>10.1f}x" if compiled else ""))


if __name__ == "__main__":
    main()
