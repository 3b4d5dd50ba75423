"""Command-line interface: JSON in/out for every closed-form result.

Every subcommand prints a single JSON object with "schema": "1".  Exit codes:
0 success, 1 domain error (bad parameters, non-unit lambda, cap exceeded),
2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import codes as C
from . import distances as DIST
from . import oracle as O
from . import polys as P
from .rings import NonUnitError, make_ring, decompose_unit, teich_root

SCHEMA = "1"


class DomainError(ValueError):
    pass


# ---------------------------------------------------------------------------
# (de)serialization
# ---------------------------------------------------------------------------


def parse_lambda(ring, text):
    """An integer (applied via from_int) or a JSON element literal."""
    try:
        return ring.from_int(int(text))
    except ValueError:
        pass
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"cannot parse lambda literal: {exc}") from exc
    return element_from_json(ring, data)


def element_from_json(ring, data):
    if isinstance(data, int):
        return ring.from_int(data)
    if not isinstance(data, list):
        raise DomainError("element literal must be an int or a list")
    if ring.family == "gr":
        if len(data) != ring.m:
            raise DomainError(f"gr element needs {ring.m} coordinates")
        return tuple(int(c) % ring.char for c in data)
    if len(data) != ring.e:
        raise DomainError(f"fu element needs {ring.e} u-adic digits")
    out = []
    for level in data:
        if not isinstance(level, list) or len(level) != ring.m:
            raise DomainError(f"each fu digit needs {ring.m} coordinates")
        out.append(tuple(int(c) % ring.p for c in level))
    return tuple(out)


def element_to_json(ring, a):
    if ring.family == "gr":
        return list(a)
    return [list(x) for x in a]


def poly_to_json(ring, f):
    return [element_to_json(ring, c) for c in f]


def fpoly_to_json(f):
    return [list(c) for c in f]


def digits_from_json(ring, d, text):
    """Parse --G: a JSON list of f-adic digits, each a field poly (<= d coeffs)."""
    if text is None:
        return None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"cannot parse G literal: {exc}") from exc
    if not isinstance(data, list):
        raise DomainError("G must be a list of digits")
    F = ring.field
    out = []
    for digit in data:
        if not isinstance(digit, list) or len(digit) > d:
            raise DomainError(f"each G digit is a field poly with at most {d} coeffs")
        coeffs = []
        for c in digit:
            if isinstance(c, int):
                coeffs.append(F.from_int(c))
            else:
                if len(c) != F.m:
                    raise DomainError(f"field element needs {F.m} coordinates")
                coeffs.append(tuple(int(v) % F.p for v in c))
        coeffs += [F.zero] * (d - len(coeffs))
        out.append(tuple(coeffs))
    return tuple(out) if out else None


def digits_to_json(digits):
    if digits is None:
        return None
    return [[list(c) for c in digit] for digit in digits]


def poly_str(ring, f):
    """Human-readable polynomial over the ring, ascending terms collected."""
    if not f:
        return "0"
    parts = []
    for i, c in enumerate(f):
        if c == ring.zero:
            continue
        if ring.family == "gr" and ring.m == 1:
            cs = str(c[0])
        else:
            cs = str(element_to_json(ring, c))
        if i == 0:
            parts.append(cs)
        else:
            xs = "x" if i == 1 else f"x^{i}"
            parts.append(xs if c == ring.one else f"{cs}*{xs}")
    return " + ".join(reversed(parts))


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def _ring_args(sp):
    sp.add_argument("--family", required=True, choices=("gr", "fu"))
    sp.add_argument("--p", required=True, type=int)
    sp.add_argument("--e", required=True, type=int)
    sp.add_argument("--m", required=True, type=int)
    sp.add_argument("--modulus", default=None,
                    help="JSON list of ints: monic irreducible over F_p")
    sp.add_argument("--n", required=True, type=int)
    sp.add_argument("--s", required=True, type=int)
    sp.add_argument("--lambda", dest="lam", required=True,
                    help="int (e.g. -1) or JSON element literal")
    sp.add_argument("--cap", type=int,
                    default=int(os.environ.get("CHAINCODE_CAP", C.DEFAULT_CAP)))
    sp.add_argument("--out", default=None, help="write JSON here instead of stdout")


def _ideal_args(sp):
    sp.add_argument("--component", type=int, default=1, help="1-based index j")
    sp.add_argument("--type", required=True,
                    choices=("zero", "unit", "chain", "II", "III", "IV"))
    sp.add_argument("--nu", type=int, default=None)
    sp.add_argument("--tau", type=int, default=None)
    sp.add_argument("--omega", type=int, default=None)
    sp.add_argument("--t", type=int, default=0)
    sp.add_argument("--mu", type=int, default=None)
    sp.add_argument("--G", default=None,
                    help="JSON list of f-adic digits (each a field poly)")


def build_ring(args):
    modulus = None
    if args.modulus is not None:
        modulus = tuple(json.loads(args.modulus))
    try:
        return make_ring(args.family, p=args.p, e=args.e, m=args.m, modulus=modulus)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def build_spec(fac, comp, args):
    kind = args.type
    ps = fac.p**fac.s
    if kind in ("zero", "unit"):
        return C.IdealSpec(kind=kind, j=comp.j)
    if kind == "chain":
        if fac.beta_zero:
            raise DomainError("chain ideals require a nonzero gamma-part of lambda")
        if args.nu is None or not 0 <= args.nu <= 2 * ps:
            raise DomainError(f"chain ideal needs --nu in [0, {2 * ps}]")
        return C.IdealSpec(kind="chain", j=comp.j, nu=args.nu)
    if not fac.beta_zero:
        raise DomainError("Type II/III/IV ideals require beta = 0")
    if kind == "II":
        if args.tau is None or not 0 <= args.tau < ps:
            raise DomainError(f"Type II needs --tau in [0, {ps})")
        return C.IdealSpec(kind="II", j=comp.j, tau=args.tau)
    if args.omega is None or not 0 < args.omega < ps:
        raise DomainError(f"Type III/IV need --omega in (0, {ps})")
    digits = digits_from_json(fac.ring, comp.d, args.G)
    if digits is not None and all(
        d == tuple([fac.ring.field.zero] * comp.d) for d in digits
    ):
        digits = None
    kap, _, _ = C.kappa(fac, comp, args.omega, args.t, digits)
    if digits is not None:
        zero_digit = tuple([fac.ring.field.zero] * comp.d)
        if digits[0] == zero_digit:
            raise DomainError("digit a_0 of G must be nonzero")
        if len(digits) > kap - args.t or any(
            d != zero_digit for d in digits[kap - args.t :]
        ):
            raise DomainError(
                f"G digits must vanish from index kappa - t = {kap - args.t} on"
            )
    if kind == "III":
        if digits is not None and not 0 <= args.t < kap:
            raise DomainError(f"Type III needs 0 <= t < kappa = {kap}")
        if digits is None and args.t != 0:
            raise DomainError("t must be 0 when G = 0")
        return C.IdealSpec(kind="III", j=comp.j, omega=args.omega, t=args.t,
                           g_digits=digits, kappa=kap)
    if args.mu is None or not 0 <= args.mu < kap:
        raise DomainError(f"Type IV needs --mu in [0, kappa = {kap})")
    if digits is not None and not args.t < args.mu:
        raise DomainError("Type IV with G != 0 needs t < mu")
    if digits is not None and len(digits) > args.mu - args.t:
        raise DomainError(f"Type IV G has at most mu - t = {args.mu - args.t} digits")
    return C.IdealSpec(kind="IV", j=comp.j, omega=args.omega, t=args.t,
                       g_digits=digits, mu=args.mu, kappa=kap)


def setup(args):
    ring = build_ring(args)
    try:
        lam = parse_lambda(ring, args.lam)
        fac = C.lemma_fac(ring, args.n, args.s, lam)
    except (ValueError, NonUnitError, P.NotCoprimeError) as exc:
        raise DomainError(str(exc)) from exc
    return ring, lam, fac


def get_component(fac, j):
    if not 1 <= j <= fac.r:
        raise DomainError(f"component must be in [1, {fac.r}]")
    return fac.components[j - 1]


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def cmd_factor(args):
    ring, lam, fac = setup(args)
    return {
        "ring": repr(ring),
        "lambda": element_to_json(ring, lam),
        "alpha": element_to_json(ring, fac.alpha),
        "beta": element_to_json(ring, fac.beta),
        "beta_zero": fac.beta_zero,
        "alpha0": element_to_json(ring, fac.alpha0),
        "length": fac.N,
        "components": [
            {
                "j": c.j,
                "f": poly_to_json(ring, c.f),
                "f_str": poly_str(ring, c.f),
                "degree": c.d,
                "g": poly_to_json(ring, c.g_red),
                "g_str": poly_str(ring, c.g_red),
                "k": poly_to_json(ring, c.k_red),
                "k_str": poly_str(ring, c.k_red),
                "mbar": fpoly_to_json(c.mbar),
            }
            for c in fac.components
        ],
    }


def _spec_row(fac, comp, spec):
    return {
        **spec.params(),
        "size": C.ideal_size(fac, comp, spec),
        "d_H": None if not fac.beta_zero or comp.d != fac.n
        else DIST.d_H_beta0(spec, fac.p, fac.s),
    }


def cmd_classify(args):
    ring, lam, fac = setup(args)
    comp = get_component(fac, args.component)
    counts = C.census(fac, comp, cap=args.cap)
    out = {"ring": repr(ring), "component": comp.j, "census": counts}
    if counts["total"] <= args.cap:
        rows = [
            _spec_row(fac, comp, spec)
            for spec in C.classify_ideals(fac, comp, cap=args.cap)
        ]
        out["ideals"] = rows
        if args.table:
            out["table"] = render_table(fac, comp, rows)
    else:
        out["ideals"] = None
        out["note"] = "ideal list omitted (census above cap)"
    return out


def render_table(fac, comp, rows):
    """Text table grouping ideals as trivial / principal / non-principal."""
    trivial, principal, nonprincipal = [], [], []
    for r in rows:
        kind = r["kind"]
        size = r["size"]
        if kind == "zero":
            trivial.append(f"{{0}}  |C|={size}")
        elif kind == "unit":
            trivial.append(f"<1>  |C|={size}")
        elif kind == "chain":
            principal.append(f"<f^{r['nu']}>  |C|={size}")
        elif kind == "II":
            principal.append(f"<gamma*f^{r['tau']}>  |C|={size}")
        elif kind == "III":
            g = "0" if r["G"] is None else json.dumps(r["G"])
            principal.append(
                f"<f^{r['omega']} + gamma*f^{r['t']}*G>, G={g}, kappa={r['kappa']}  |C|={size}"
            )
        else:
            g = "0" if r["G"] is None else json.dumps(r["G"])
            nonprincipal.append(
                f"<f^{r['omega']} + gamma*f^{r['t']}*G, gamma*f^{r['mu']}>, "
                f"G={g}, kappa={r['kappa']}  |C|={size}"
            )
    lines = ["Trivial ideals:"]
    lines += [f"  {t}" for t in trivial]
    lines.append("Principal ideals:")
    lines += [f"  {t}" for t in principal]
    lines.append("Non-principal ideals:")
    lines += [f"  {t}" for t in nonprincipal]
    return lines


def cmd_size(args):
    ring, lam, fac = setup(args)
    comp = get_component(fac, args.component)
    spec = build_spec(fac, comp, args)
    return {"ideal": spec.params(), "size": C.ideal_size(fac, comp, spec)}


def cmd_dual(args):
    ring, lam, fac = setup(args)
    comp = get_component(fac, args.component)
    spec = build_spec(fac, comp, args)
    gens, kstar, dual_spec = C.dual_ideal(fac, comp, spec)
    return {
        "ideal": spec.params(),
        "dual_modulus": poly_to_json(ring, kstar),
        "dual_modulus_str": poly_str(ring, kstar),
        "dual_generators": [poly_to_json(ring, g) for g in gens],
        "dual_generators_str": [poly_str(ring, g) for g in gens],
        "dual_ideal": None if dual_spec is None else dual_spec.params(),
        "dual_size": ring.cardinality**fac.N // C.ideal_size(fac, comp, spec)
        if fac.r == 1 else None,
    }


def _require_irreducible(fac, comp):
    if comp.d != fac.n:
        raise DomainError(
            "distance formulas require x^n - alpha_0 irreducible over the "
            "residue field (component degree d = n)"
        )


def cmd_dist(args):
    ring, lam, fac = setup(args)
    comp = get_component(fac, args.component)
    spec = build_spec(fac, comp, args)
    _require_irreducible(fac, comp)
    p, s, n = fac.p, fac.s, fac.n
    if spec.kind == "chain":
        dh = DIST.d_H_unit(spec.nu, p, s, 2)
        drt = DIST.d_RT_unit(spec.nu, p, s, 2, n)
    else:
        dh = DIST.d_H_beta0(spec, p, s)
        drt = DIST.d_RT_beta0(spec, p, s, n)
    value = dh if args.metric == "hamming" else drt
    return {"ideal": spec.params(), "metric": args.metric, "distance": value}


def cmd_wdist(args):
    ring, lam, fac = setup(args)
    comp = get_component(fac, args.component)
    spec = build_spec(fac, comp, args)
    _require_irreducible(fac, comp)
    p, s, m, n = fac.p, fac.s, ring.m, fac.n
    if spec.kind == "chain":
        dist = DIST.rt_wdist_unit(spec.nu, p, s, 2, m, n)
    else:
        dist = DIST.rt_wdist_beta0(spec, p, s, m, n)
    return {"ideal": spec.params(), "metric": "rt", "weights": list(dist)}


def cmd_chain(args):
    ring = build_ring(args)
    try:
        lam = parse_lambda(ring, args.lam)
        data = C.unit_case_chain(ring, args.n, args.s, lam)
    except (ValueError, NonUnitError) as exc:
        raise DomainError(str(exc)) from exc
    return {
        "ring": repr(ring),
        "lambda": element_to_json(ring, lam),
        "lambda0": element_to_json(ring, data["lam0"]),
        "ideals": [
            {
                "nu": e["nu"],
                "generator_str": poly_str(ring, e["generator"]),
                "size": e["size"],
                "dual_generator_str": poly_str(ring, e["dual_generator"]),
                "d_H": DIST.d_H_unit(e["nu"], ring.p, args.s, ring.e),
                "d_RT": DIST.d_RT_unit(e["nu"], ring.p, args.s, ring.e, args.n),
                "rt_weights": list(
                    DIST.rt_wdist_unit(e["nu"], ring.p, args.s, ring.e, ring.m, args.n)
                ),
            }
            for e in data["ideals"]
        ],
    }


def cmd_isodual(args):
    ring, lam, fac = setup(args)
    try:
        fac, specs = C.isodual_codes(ring, args.n, args.s, lam, cap=args.cap)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    comp = fac.components[0]
    return {
        "ring": repr(ring),
        "count": len(specs),
        "isodual_codes": [_spec_row(fac, comp, sp) for sp in specs],
    }


def cmd_verify(args):
    ring = build_ring(args)
    try:
        lam = parse_lambda(ring, args.lam)
        if ring.e == 2:
            report = O.verify_report(
                ring, args.n, args.s, lam, cap=args.cap,
                corrupt_sizes=args.inject_size_error,
            )
        else:
            report = O.verify_chain_report(
                ring, args.n, args.s, lam, cap=args.cap,
                corrupt_sizes=args.inject_size_error,
            )
    except (ValueError, NonUnitError, C.CapExceeded) as exc:
        raise DomainError(str(exc)) from exc
    report["ring"] = repr(ring)
    return report


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="chaincodes",
        description="Constacyclic codes of length n*p^s over finite chain rings",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("factor", help="factor x^{np^s} - lambda into components")
    _ring_args(sp)
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("classify", help="list all ideals of a component ring")
    _ring_args(sp)
    sp.add_argument("--component", type=int, default=1)
    sp.add_argument("--table", action="store_true", help="render a text table")
    sp.set_defaults(func=cmd_classify)

    for name, func, hlp in (
        ("size", cmd_size, "exact cardinality of one ideal"),
        ("dual", cmd_dual, "dual-ideal generators"),
        ("dist", cmd_dist, "Hamming or RT distance"),
        ("wdist", cmd_wdist, "RT weight distribution"),
    ):
        sp = sub.add_parser(name, help=hlp)
        _ring_args(sp)
        _ideal_args(sp)
        if name == "dist":
            sp.add_argument("--metric", required=True, choices=("hamming", "rt"))
        sp.set_defaults(func=func)

    sp = sub.add_parser("chain", help="general-e chain-case ideal lattice")
    _ring_args(sp)
    sp.set_defaults(func=cmd_chain)

    sp = sub.add_parser("isodual", help="closed-form isodual families")
    _ring_args(sp)
    sp.set_defaults(func=cmd_isodual)

    sp = sub.add_parser("verify", help="cross-check formulas against the oracle")
    _ring_args(sp)
    sp.add_argument("--inject-size-error", action="store_true",
                    help="negative control: corrupt sizes so checks must fail")
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        result = args.func(args)
    except (DomainError, C.CapExceeded) as exc:
        payload = {"schema": SCHEMA, "command": args.command, "error": str(exc)}
        print(json.dumps(payload, indent=2))
        return 1
    payload = {"schema": SCHEMA, "command": args.command, **result}
    text = json.dumps(payload, indent=2)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.command == "verify" and not result["ok"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
