"""Compare the compiled and pure-Python kernels on the workloads the package runs.

    python3 benchmarks/bench_kernels.py [--n 5 6] [--repeat 3]

Workloads: dense convolution of two B-elements, left multiplication of the
LRM basis by B_alpha, and integer row reduction of the n! right translates
of B_alpha (the generator matrix of a right ideal).  Results of both
backends are compared for equality before timing is reported.
"""
from __future__ import annotations

import argparse
import statistics
import time

from lrmbasis import kernels
from lrmbasis.compositions import compositions_of
from lrmbasis.filtration import _translates, lrm_vectors
from lrmbasis.group_algebra import b_element


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), result


def workloads(n):
    comps = compositions_of(n)
    alpha = comps[len(comps) // 3]
    a = b_element(alpha).to_vector()
    b = b_element(comps[-2]).to_vector()
    yield f"convolve B{alpha} * B{comps[-2]}", lambda be: kernels.convolve(a, b, n, backend=be)
    vecs = lrm_vectors(n)
    yield f"B{alpha} * LRM basis ({len(vecs)} rows)", \
        lambda be: kernels.left_multiply_rows(a, vecs, n, backend=be)
    for gamma in (alpha, comps[-2]):
        rows = _translates(b_element(gamma).to_vector(), n)
        yield f"rref of R{gamma} generators ({len(rows)}x{len(rows)})", \
            lambda be, rows=rows: kernels.rref_int(rows, len(rows), backend=be)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[5, 6])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if kernels.BACKEND != "cython":
        print("compiled extension not available; only the Python backend can run")
    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    print(f"{'workload':<48} {'n':>2} " + " ".join(f"{b + ' (s)':>13}" for b in backends) + "  speedup")
    for n in args.n:
        for label, fn in workloads(n):
            timings, results = [], []
            for be in backends:
                best, _, res = best_of(lambda: fn(be), args.repeat)
                timings.append(best)
                results.append(res)
            if any(r != results[0] for r in results):
                raise SystemExit(f"backends disagree on {label}")
            speed = f"{timings[0] / timings[-1]:7.1f}x" if len(timings) > 1 else ""
            print(f"{label:<48} {n:>2} " + " ".join(f"{t:13.4f}" for t in timings) + "  " + speed)


if __name__ == "__main__":
    main()
