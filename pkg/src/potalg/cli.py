"""Command-line front end: parse, dispatch, and emit deterministic reports.

Subcommands: hilbert, center, jacobi, saito, classify, matfact,
cohomology, poisson-check.  Reports are text or JSON with stable key
order; identical arguments and seed give identical output apart from the
timing field.  Exit codes: 0 all checks pass, 1 a mathematical check
failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import __version__
from .center import centralizer, verify_central
from .classify import classify_weights
from .commpoly import CommPoly
from .exprparse import (
    free_parameters,
    lower_commpoly,
    lower_potential,
    parse_expression,
)
from .gridal import RelationSet, hilbert_certificate
from .matfact import CurvePoint, build_D, symbolic_adjugate_identity, verify_factorization
from .ncalg import (
    NCPoly,
    ParameterSet,
    Potential,
    STANDARD_WEIGHTS,
    WeightSystem,
    cyclic_derivative,
    make_PQR,
    make_standard_potential,
)
from .poisson import (
    PoissonStructure,
    build_delpezzo_phi,
    fermat_phi,
    frobenius_and_unimodularity,
    jacobi_identity_check,
    jacobi_ring,
    milnor_number,
)
from .series import hh2_nonpositive_dim, hh_series, ph_Aphi_ranks, ph_Bphi_dims, saito

LETTER_NAMES = "xyz"


def sample_rational(rng: random.Random) -> Fraction:
    """Seeded generic rational: numerator in [-10^6, 10^6], denominator in [1, 10^3]."""
    return Fraction(rng.randint(-(10**6), 10**6), rng.randint(1, 10**3))


def poly_text(f) -> str:
    """Deterministic expression text for an NCPoly (reparses to the same poly)."""
    if isinstance(f, Potential):
        f = NCPoly({cw.representative: c for cw, c in f.terms.items()})
    if f.is_zero():
        return "0"
    bits = []
    for w in sorted(f.terms, key=lambda w: (len(w), w)):
        c = f.terms[w]
        word = "*".join(LETTER_NAMES[i] for i in w) if w else ""
        if not word:
            term = str(c)
        elif c == 1:
            term = word
        elif c == -1:
            term = f"-{word}"
        else:
            term = f"{c}*{word}"
        bits.append(term)
    out = bits[0]
    for term in bits[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def comm_text(f: CommPoly) -> str:
    return repr(f)


def frac_text(v: Fraction) -> str:
    return str(v)


class Usage(Exception):
    pass


def _weights(args) -> WeightSystem:
    if args.type:
        return STANDARD_WEIGHTS[args.type]
    if args.weights:
        try:
            a, b, c = (int(v) for v in args.weights.split(","))
        except ValueError:
            raise Usage(f"--weights expects 'a,b,c', got {args.weights!r}")
        return WeightSystem(a, b, c)
    raise Usage("one of --type or --weights is required")


def _params(args) -> dict:
    out = {}
    if args.params:
        for item in args.params.split(","):
            if "=" not in item:
                raise Usage(f"--params entries look like k=v, got {item!r}")
            key, val = item.split("=", 1)
            try:
                out[key.strip()] = Fraction(val.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise Usage(f"bad value for parameter {key.strip()!r}: {exc}")
    return out


def _read_potential_arg(arg: str) -> str:
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return fh.read()
    return arg


def _potential(args, ws: WeightSystem, rng: random.Random, bindings: dict, inputs: dict):
    """The working potential: parsed text or the standard family."""
    if args.potential:
        text = _read_potential_arg(args.potential)
        ast = parse_expression(text)
        sampled = {}
        for name in sorted(free_parameters(ast)):
            if name not in bindings:
                sampled[name] = sample_rational(rng)
        bindings.update(sampled)
        inputs["potential"] = text.strip()
        if sampled:
            inputs["sampled_params"] = {k: frac_text(v) for k, v in sampled.items()}
        return lower_potential(ast, bindings)
    p, q, r = ws.exponents()
    t = bindings.get("t")
    c = bindings.get("c")
    sampled = {}
    if t is None:
        t = sampled["t"] = sample_rational(rng)
    if c is None:
        c = sampled["c"] = sample_rational(rng)
    lower = []
    for name, count in (("alpha", p - 1), ("beta", q - 1), ("gamma", r - 1)):
        coeffs = []
        for i in range(count):
            key = f"{name}{i + 1}"
            val = bindings.get(key)
            if val is None:
                val = sampled[key] = sample_rational(rng)
            coeffs.append(val)
        lower.append(tuple(coeffs))
    P, Q, R = make_PQR(ws, tuple(lower))
    params = ParameterSet(t=t, c=c, P_coeffs=P, Q_coeffs=Q, R_coeffs=R)
    inputs["family"] = "standard"
    inputs["t"], inputs["c"] = frac_text(Fraction(t)), frac_text(Fraction(c))
    if sampled:
        inputs["sampled_params"] = {k: frac_text(v) for k, v in sampled.items()}
    return make_standard_potential(ws, params)


def _report(args, command: str, inputs: dict, results: dict, checks: list, t0: float):
    report = {
        "command": command,
        "inputs": inputs,
        "results": results,
        "checks": checks,
        "seed": args.seed,
        "version": __version__,
        "timing_ms": int((time.time() - t0) * 1000),
    }
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True)
    else:
        lines = [f"== {command} =="]
        for k, v in inputs.items():
            lines.append(f"  {k}: {v}")
        for k, v in results.items():
            lines.append(f"{k}: {v}")
        for chk in checks:
            status = "PASS" if chk["pass"] else "FAIL"
            lines.append(
                f"check {chk['name']}: {status} (expected {chk['expected']}, actual {chk['actual']})"
            )
        lines.append(f"elapsed: {report['timing_ms']} ms")
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if all(c["pass"] for c in checks) else 1


def _check(name, expected, actual) -> dict:
    return {"name": name, "expected": expected, "actual": actual, "pass": expected == actual}


# -- subcommands ------------------------------------------------------------


def cmd_hilbert(args) -> int:
    t0 = time.time()
    ws = _weights(args)
    rng = random.Random(args.seed)
    bindings = _params(args)
    inputs = {"weights": ws.weights, "d": ws.d}
    phi = _potential(args, ws, rng, bindings, inputs)
    rs = RelationSet.from_potential(phi, ws)
    mode = "graded" if args.graded else ("filtered" if args.filtered else None)
    report = hilbert_certificate(rs, args.max_degree, mode=mode)
    results = {
        "mode": report.mode,
        "N": report.N,
        "dims": report.dims,
        "proof": report.proof,
    }
    if report.cumulative is not None:
        results["cumulative"] = report.cumulative
    checks = [_check("hilbert-series-match", report.expected, report.dims)]
    return _report(args, "hilbert", inputs, results, checks, t0)


def cmd_center(args) -> int:
    t0 = time.time()
    ws = _weights(args)
    rng = random.Random(args.seed)
    bindings = _params(args)
    inputs = {"weights": ws.weights, "d": ws.d}
    phi = _potential(args, ws, rng, bindings, inputs)
    rs = RelationSet.from_potential(phi, ws)
    mode = "graded" if args.graded else "filtered"
    if mode == "graded" and not rs.homogeneous:
        raise Usage("--graded needs a homogeneous potential")
    bound = args.max_degree if args.max_degree is not None else ws.d
    sol = centralizer(rs, bound, mode)
    psi = sol.normalized_psi
    results = {
        "mode": mode,
        "degree_bound": bound,
        "solution_dim": sol.solution_dim,
        "normalized_psi": poly_text(psi) if psi is not None else None,
    }
    checks = []
    if psi is not None:
        checks.append(_check("normalized-psi-central", True, verify_central(rs, psi, mode)))
    return _report(args, "center", inputs, results, checks, t0)


def cmd_jacobi(args) -> int:
    t0 = time.time()
    ws = _weights(args)
    rng = random.Random(args.seed)
    bindings = _params(args)
    inputs = {"weights": ws.weights, "d": ws.d}
    if args.potential:
        text = _read_potential_arg(args.potential)
        ast = parse_expression(text)
        for name in sorted(free_parameters(ast)):
            bindings.setdefault(name, sample_rational(rng))
        phi = lower_commpoly(ast, bindings)
        inputs["phi"] = text.strip()
    else:
        tau = bindings.get("tau", Fraction(1))
        phi = fermat_phi(ws, tau)
        inputs["phi"] = comm_text(phi)
    report = jacobi_ring(phi, ws, degree_cap=args.max_degree)
    results = {
        "graded_dims": report.graded_dims,
        "mu": report.mu,
        "finite": report.finite,
    }
    checks = []
    sf = saito(ws.a, ws.b, ws.c, ws.d)
    if sf.is_polynomial:
        checks.append(_check("dims-match-series", list(sf.quotient), report.graded_dims))
        checks.append(_check("mu-matches-count", sf.quotient_at_one(), report.mu))
    return _report(args, "jacobi", inputs, results, checks, t0)


def cmd_saito(args) -> int:
    t0 = time.time()
    ws = _weights(args)
    d = args.max_degree if args.max_degree is not None else ws.d
    inputs = {"weights": ws.weights, "d": d}
    sf = saito(ws.a, ws.b, ws.c, d)
    results = {
        "is_polynomial": sf.is_polynomial,
        "quotient": list(sf.quotient) if sf.quotient is not None else None,
        "mu": frac_text(sf.mu),
    }
    checks = []
    if sf.is_polynomial:
        checks.append(_check("value-at-one", frac_text(sf.mu), str(sf.quotient_at_one())))
    return _report(args, "saito", inputs, results, checks, t0)


def cmd_classify(args) -> int:
    t0 = time.time()
    ws_args = _weights(args)
    d = args.max_degree
    inputs = {"weights": ws_args.weights}
    res = classify_weights(ws_args.a, ws_args.b, ws_args.c, d)
    results = {
        "verdict": res.verdict,
        "d": res.d,
        "reason": res.reason,
    }
    if res.elliptic:
        results["pqr"] = (res.p, res.q, res.r)
        results["legs"] = res.legs
    return _report(args, "classify", inputs, results, [], t0)


def cmd_matfact(args) -> int:
    t0 = time.time()
    rng = random.Random(args.seed)
    if args.point:
        try:
            a, b, g = (Fraction(v) for v in args.point.split(","))
        except (ValueError, ZeroDivisionError):
            raise Usage(f"--point expects 'a,b,c' rationals, got {args.point!r}")
    else:
        def nz():
            v = Fraction(0)
            while not v:
                v = sample_rational(rng)
            return v

        a, b, g = nz(), nz(), nz()
    pt = CurvePoint(a, b, g)
    mf = build_D(pt)
    inputs = {"point": [frac_text(v) for v in (a, b, g)]}
    results = {
        "tau": frac_text(pt.tau),
        "psi": comm_text(mf.psi),
        "singular_curve": pt.singular_curve,
    }
    checks = [
        _check("composition-identity", True, verify_factorization(mf)),
        _check("adjugate-identity-symbolic", True, symbolic_adjugate_identity()),
    ]
    return _report(args, "matfact", inputs, results, checks, t0)


def cmd_cohomology(args) -> int:
    t0 = time.time()
    ws = _weights(args)
    cap = args.max_degree if args.max_degree is not None else 3 * ws.d
    inputs = {"weights": ws.weights, "d": ws.d, "cap": cap}
    series = {}
    for k in range(4):
        s = hh_series(k, ws, cap)
        series[f"hh{k}"] = {
            "min_degree": s.min_degree,
            "coeffs": list(s.coeffs),
        }
    mu = milnor_number(ws)
    results = {
        "series": series,
        "hh2_nonpositive_dim": hh2_nonpositive_dim(ws),
        "ph_B_dims": ph_Bphi_dims(ws),
        "ph_A_ranks": list(ph_Aphi_ranks(ws)),
        "mu": frac_text(mu),
    }
    checks = [
        _check("hh2-nonpositive-equals-mu", frac_text(mu), str(results["hh2_nonpositive_dim"])),
    ]
    return _report(args, "cohomology", inputs, results, checks, t0)


def cmd_poisson_check(args) -> int:
    t0 = time.time()
    ws = _weights(args)
    rng = random.Random(args.seed)
    bindings = _params(args)
    inputs = {"weights": ws.weights}
    if args.potential:
        text = _read_potential_arg(args.potential)
        ast = parse_expression(text)
        for name in sorted(free_parameters(ast)):
            bindings.setdefault(name, sample_rational(rng))
        phi = lower_commpoly(ast, bindings)
        inputs["phi"] = text.strip()
    else:
        tau = bindings.get("tau")
        while not tau:
            tau = sample_rational(rng)
        phi = fermat_phi(ws, tau)
        inputs["phi"] = comm_text(phi)
    ps = PoissonStructure(phi, ws)
    x, y, z = (CommPoly.variable(i) for i in range(3))
    casimir = all(ps.bracket(phi, v).is_zero() for v in (x, y, z))
    fr = frobenius_and_unimodularity(ps.alpha())
    results = {"phi_degree": phi.weighted_degree(ws)}
    checks = [
        _check("jacobi-identity", True, jacobi_identity_check(ps)),
        _check("casimir", True, casimir),
        _check("frobenius-integrable", True, fr["poisson"]),
        _check("closed-one-form", True, fr["unimodular"]),
    ]
    return _report(args, "poisson-check", inputs, results, checks, t0)


# -- wiring -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="potalg",
        description="Exact workbench for algebras from cyclic potentials on x, y, z.",
    )
    parser.add_argument("--version", action="version", version=f"potalg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, potential=True):
        p.add_argument("--type", choices=sorted(STANDARD_WEIGHTS))
        p.add_argument("--weights", help="a,b,c")
        if potential:
            p.add_argument("--potential", help="expression or @file")
        p.add_argument("--params", help="k=v[,k=v...] exact rationals")
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the report to this path")

    p = sub.add_parser("hilbert", help="flatness certificate for the quotient dims")
    common(p)
    p.add_argument("--graded", action="store_true")
    p.add_argument("--filtered", action="store_true")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("center", help="solve for central elements")
    common(p)
    p.add_argument("--graded", action="store_true")
    p.add_argument("--filtered", action="store_true")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("jacobi", help="graded derivative-quotient dimensions")
    common(p)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("saito", help="polynomiality of the dimension series")
    common(p, potential=False)
    p.set_defaults(func=cmd_saito)

    p = sub.add_parser("classify", help="rational/elliptic verdict for weights")
    common(p, potential=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("matfact", help="matrix factorization from a curve point")
    common(p, potential=False)
    p.add_argument("--point", help="alpha,beta,gamma (nonzero rationals)")
    p.set_defaults(func=cmd_matfact)

    p = sub.add_parser("cohomology", help="cohomology dimension series")
    common(p, potential=False)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("poisson-check", help="bracket identities for a polynomial")
    common(p)
    p.set_defaults(func=cmd_poisson_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
