"""Benchmark: compiled modular echelon kernel vs the pure-Python fallback.

The workload is the production hot loop, incremental row reduction of
relation-product spans over GF(p), on the same instances the flatness
certificates use.  Run:

    python benchmarks/bench_echelon.py [--quick]
"""

import argparse
import time
from fractions import Fraction as F

from potalg._linalg.certify import PRIMES
from potalg._linalg.engines import HAVE_KERNEL, gf_engine
from potalg._linalg.span import filtered_span, graded_span
from potalg.gridal import RelationSet
from potalg.ncalg import STANDARD_WEIGHTS, ParameterSet, make_PQR, make_standard_potential


def relation_set(kind):
    ws = STANDARD_WEIGHTS[kind]
    p, q, r = ws.exponents()
    low = (
        tuple(F(k + 2, 3) for k in range(p - 1)),
        tuple(F(k + 1, 2) for k in range(q - 1)),
        tuple(F(2 * k + 1, 5) for k in range(r - 1)),
    )
    P, Q, R = make_PQR(ws, low)
    params = ParameterSet(t=F(7, 3), c=F(5, 2), P_coeffs=P, Q_coeffs=Q, R_coeffs=R)
    return RelationSet.from_potential(make_standard_potential(ws, params), ws), ws


def run_case(label, runner, force_python):
    t0 = time.time()
    ranks = runner(force_python)
    dt = time.time() - t0
    return dt, ranks


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller truncations")
    args = ap.parse_args()

    p = PRIMES[0]
    cases = []
    for kind, filt_N, grad_N in (("E6", 6, 7), ("E7", 8, 8), ("E8", 10, 10)):
        if not args.quick:
            filt_N += 2
            grad_N += 2
        rel, ws = relation_set(kind)
        lead = rel.leading()

        def filt(force_python, rel=rel, ws=ws, N=filt_N):
            span = filtered_span(
                rel.relations, ws, N, lambda n: gf_engine(n, p, force_python)
            )
            return span.ranks

        def grad(force_python, lead=lead, ws=ws, N=grad_N):
            span = graded_span(
                lead.relations, ws, N, lambda n: gf_engine(n, p, force_python)
            )
            return span.ranks

        cases.append((f"{kind} filtered N={filt_N}", filt))
        cases.append((f"{kind} graded  N={grad_N}", grad))

    print(f"compiled kernel available: {HAVE_KERNEL}")
    print(f"{'case':24s} {'python':>9s} {'kernel':>9s} {'speedup':>8s}")
    for label, runner in cases:
        t_py, ranks_py = run_case(label, runner, force_python=True)
        if HAVE_KERNEL:
            t_k, ranks_k = run_case(label, runner, force_python=False)
            assert ranks_py == ranks_k, f"{label}: engines disagree"
            print(f"{label:24s} {t_py:8.2f}s {t_k:8.2f}s {t_py / max(t_k, 1e-9):7.1f}x")
        else:
            print(f"{label:24s} {t_py:8.2f}s {'-':>9s} {'-':>8s}")


if __name__ == "__main__":
    main()
