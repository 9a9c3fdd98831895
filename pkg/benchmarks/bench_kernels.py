"""Compare the compiled and pure-Python kernels on the hot loops.

    python3 benchmarks/bench_kernels.py [--repeat N] [--max-q Q]

Workloads: exterior powers of the conormal bundle of the Debarre-Voisin
setup (wedge^3 U on Gr(6,10), rank 20) followed by their Schur expansion,
and the plethysm wedge^2(wedge^2(wedge^2 Q)) on Gr(2,6).
"""
import argparse
import time

from bbwcalc import kernels
from bbwcalc.bundles import GrassmannianContext, Q, U, Wedge, character
from bbwcalc.symcore import Functor, _plethysm_cached, plethysm_character, schur_expand


def _timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        _plethysm_cached.cache_clear()
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads(max_q):
    dv = GrassmannianContext(6, 10)
    conormal = character(Wedge(3, U()), dv)
    for q in range(2, max_q + 1):
        yield f"DV wedge^{q} character", lambda q=q: plethysm_character(Functor.wedge(q), conormal).dimension
        yield f"DV wedge^{q} expansion", lambda q=q: len(schur_expand(plethysm_character(Functor.wedge(q), conormal)).terms)
    g = GrassmannianContext(2, 6)
    k = character(Wedge(2, Wedge(2, Q())), g)
    yield "Gr(2,6) wedge^2 K tensor K^dual", lambda: len(schur_expand(
        plethysm_character(Functor.wedge(2), k).tensor(k.dual())).terms)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-q", type=int, default=8)
    args = parser.parse_args()
    if kernels._c is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'workload':36s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for name, fn in workloads(args.max_q):
        results = {}
        for backend in ("python", "cython"):
            kernels.set_backend(backend)
            results[backend] = _timed(fn, args.repeat)
        kernels.set_backend("cython")
        (tp, vp), (tc, vc) = results["python"], results["cython"]
        if vp != vc:
            raise SystemExit(f"{name}: backends disagree ({vp} != {vc})")
        print(f"{name:36s} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
