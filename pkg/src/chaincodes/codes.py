"""Structure of constacyclic codes of length n*p^s over chain rings.

For nilpotency index e = 2 this module builds the coprime factorization
x^{np^s} - lambda = prod_j (f_j^{p^s} + gamma*g_j), classifies all ideals of
each component ring K_j = R[x]/<k_j> (chain lattice when beta != 0; Types
I-IV with the pivot exponent kappa when beta = 0), and produces exact sizes,
dual-ideal generators, CRT composition and isodual families.  For general e
with unit gamma-part it builds the chain-ring ideal lattice directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import polys as P
from .rings import teich_root, decompose_unit


class CapExceeded(RuntimeError):
    """Raised when an enumeration would exceed the configured cap."""


DEFAULT_CAP = 1 << 20


@dataclass(frozen=True)
class FactorComponent:
    """One factor k_j = f_j^{p^s} + gamma*g_j of x^{np^s} - lambda."""

    j: int          # 1-based component index
    f: tuple        # monic basic irreducible, degree d
    d: int
    g: tuple        # exact cascade g_j (product identity holds with this one)
    g_red: tuple    # g_j reduced mod f^{p^s} (canonical form)
    k: tuple        # f^{p^s} + gamma*g (exact)
    k_red: tuple    # f^{p^s} + gamma*g_red: monic degree d*p^s, <k_red> = <k>
    mbar: tuple     # field poly M_j with residue(g) = fbar^{p^{s-1}} * M_j
                    # (beta = 0, char p^2 only; else empty)


@dataclass(frozen=True)
class Factorization:
    ring: object
    n: int
    s: int
    lam: tuple
    alpha: tuple
    beta: tuple
    alpha0: tuple
    components: tuple

    @property
    def p(self):
        return self.ring.p

    @property
    def N(self):
        return self.n * self.p**self.s

    @property
    def r(self):
        return len(self.components)

    @property
    def beta_zero(self):
        return self.beta == self.ring.zero

    @property
    def char_p2(self):
        return self.ring.char == self.ring.p**2


@dataclass(frozen=True)
class IdealSpec:
    """A classified ideal of K_j.

    kind is one of 'zero', 'unit', 'chain' (beta != 0 / general-e case,
    parameter nu), 'II' (tau), 'III' (omega, t, g_digits, kappa) or 'IV'
    (omega, t, g_digits, mu, kappa).  g_digits is None for G = 0, otherwise
    a tuple of field polynomials (each a tuple of d field elements) giving
    the f-adic digits of G starting at exponent 0.
    """

    kind: str
    j: int = 1
    nu: int = None
    tau: int = None
    omega: int = None
    t: int = None
    mu: int = None
    g_digits: tuple = None
    kappa: int = None

    def params(self):
        out = {"kind": self.kind, "j": self.j}
        for name in ("nu", "tau", "omega", "t", "mu", "kappa"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        if self.kind in ("III", "IV"):
            out["G"] = (
                None
                if self.g_digits is None
                else [[list(c) for c in digit] for digit in self.g_digits]
            )
        return out


# ---------------------------------------------------------------------------
# Cascade factorization of x^{np^s} - lambda (e = 2)
# ---------------------------------------------------------------------------


def lemma_fac(ring, n, s, lam):
    """Factor x^{np^s} - lambda into the r coprime pieces f_j^{p^s}+gamma*g_j."""
    if ring.e != 2:
        raise ValueError("cascade factorization requires nilpotency index 2")
    if n % ring.p == 0:
        raise ValueError("n must be coprime to p")
    if not ring.is_unit(lam):
        raise ValueError("lambda must be a unit")
    p, ps = ring.p, ring.p**s
    alpha, beta = decompose_unit(ring, lam)
    alpha0 = teich_root(ring, alpha, s)
    F = ring.field
    fbars = P.factor_xn_minus_a(F, n, ring.residue(alpha0))
    fs = P.hensel_lift(ring, fbars, n, alpha0)
    r = len(fs)

    # B with x^{np^s} - lambda = prod f_j^{p^s} - gamma*B
    if ring.char == p:
        bpoly = P.const(ring, beta)
    else:
        bd = P.binom_data(p, s, ring)["a_ring"]
        acc = ()
        xn_a0 = P.xn_minus(ring, n, alpha0)
        for k in range(1, p):
            term = P.ppow(ring, xn_a0, k * p ** (s - 1))
            coef = ring.mul(
                ring.mul(ring.z, bd[k]), ring.pow(alpha0, ps - k * p ** (s - 1))
            )
            acc = P.padd(ring, acc, P.pscale(ring, coef, term))
        bpoly = P.psub(ring, P.const(ring, beta), acc)
    neg_b = P.pneg(ring, bpoly)

    fps = [P.ppow(ring, f, ps) for f in fs]
    suffix = [()] * r
    acc = (ring.one,)
    for u in range(r - 1, -1, -1):
        suffix[u] = acc
        acc = P.pmul(ring, acc, fps[u])
    vs, ws = [None] * r, [None] * r
    for u in range(r - 1):
        vs[u], ws[u] = P.bezout(ring, fps[u], suffix[u])

    gs = []
    vprod = (ring.one,)
    for jj in range(r):
        if jj < r - 1:
            gj = P.pmul(ring, P.pmul(ring, neg_b, ws[jj]), vprod)
            vprod = P.pmul(ring, vprod, vs[jj])
        else:
            gj = P.pmul(ring, neg_b, vprod)
        gs.append(gj)

    comps = []
    beta_zero = beta == ring.zero
    for jj in range(r):
        d = P.deg(fs[jj])
        kj = P.padd(
            ring, fps[jj], tuple(ring.gamma_pow_mul(c, 1) for c in gs[jj])
        )
        g_red = P.pmod(ring, gs[jj], fps[jj])
        k_red = P.padd(
            ring, fps[jj], tuple(ring.gamma_pow_mul(c, 1) for c in g_red)
        )
        assert len(k_red) == d * ps + 1 and k_red[-1] == ring.one
        mbar = ()
        if beta_zero and ring.char == p * p:
            gbar = P.pmod(F, P.poly_residue(ring, gs[jj]), P.ppow(F, fbars[jj], ps))
            if gbar:
                mbar, rem = P.pdivmod(F, gbar, P.ppow(F, fbars[jj], p ** (s - 1)))
                assert not rem, "g_j must be divisible by f_j^{p^{s-1}}"
                assert P.pmod(F, mbar, fbars[jj]), "M_j must be coprime to f_j"
        comps.append(
            FactorComponent(
                j=jj + 1, f=fs[jj], d=d, g=gs[jj], g_red=g_red, k=kj,
                k_red=k_red, mbar=mbar,
            )
        )

    prod = (ring.one,)
    for c in comps:
        prod = P.pmul(ring, prod, c.k)
    target = P.xn_minus(ring, n * ps, lam)
    assert prod == target, "cascade product identity failed"
    return Factorization(
        ring=ring, n=n, s=s, lam=lam, alpha=alpha, beta=beta, alpha0=alpha0,
        components=tuple(comps),
    )


def nilpotency_data(fac, comp):
    """The ideal <f_j^{p^s}> and the nilpotency index of f_j in K_j."""
    ps = fac.p**fac.s
    if not fac.beta_zero:
        return {"ideal_of_f_pow_ps": "gamma", "nilpotency": 2 * ps}
    if not fac.char_p2:
        return {"ideal_of_f_pow_ps": "zero", "nilpotency": ps}
    return {
        "ideal_of_f_pow_ps": "gamma_f_pow_ps1",
        "nilpotency": 2 * ps - fac.p ** (fac.s - 1),
    }


# ---------------------------------------------------------------------------
# kappa and the Type I-IV classification (beta = 0)
# ---------------------------------------------------------------------------


def _gbar_poly(fac, comp, g_digits):
    """Field polynomial sum_i a_i(x) * fbar^i from digit vector."""
    F = fac.ring.field
    fbar = P.poly_residue(fac.ring, comp.f)
    acc = ()
    power = (F.one,)
    for digit in g_digits:
        acc = P.padd(F, acc, P.pmul(F, P.trim(F, digit), power))
        power = P.pmul(F, power, fbar)
    return acc


def g_ring_poly(fac, comp, g_digits):
    """Ring polynomial G(x) = sum_i lift(a_i) * f^i (Teichmuller digits)."""
    ring = fac.ring
    acc = ()
    power = (ring.one,)
    for digit in g_digits:
        lifted = P.trim(ring, tuple(ring.teich_by_residue(c) for c in digit))
        acc = P.padd(ring, acc, P.pmul(ring, lifted, power))
        power = P.pmul(ring, power, comp.f)
    return acc


def _f_valuation(field, h, fbar, bound):
    """Largest v <= bound with fbar^v dividing h (h nonzero), plus cofactor."""
    v = 0
    while v < bound:
        q, rem = P.pdivmod(field, h, fbar)
        if rem:
            break
        h = q
        v += 1
    return v, h


def kappa(fac, comp, omega, t, g_digits):
    """(kappa, delta, A_G-bar) for a Type III/IV generator f^omega+gamma f^t G.

    delta and the field image of A_G are only defined in the char-p^2
    boundary case omega = p^s - p^{s-1} + t with G != 0; otherwise they are
    returned as None.
    """
    p, s = fac.p, fac.s
    ps, ps1 = p**s, p ** (s - 1)
    if not (0 < omega < ps):
        raise ValueError("omega out of range")
    g_zero = not g_digits
    if not fac.char_p2:
        k = omega if g_zero else min(omega, ps - omega + t)
        return k, None, None
    if g_zero:
        return min(omega, ps1), None, None
    if omega != ps - ps1 + t:
        return min(omega, ps - omega + t, ps1), None, None
    # boundary case: kappa depends on gamma*(M_j - G) = gamma*f^delta*A_G
    F = fac.ring.field
    fbar = P.poly_residue(fac.ring, comp.f)
    gbar = _gbar_poly(fac, comp, g_digits)
    h = P.pmod(F, P.psub(F, comp.mbar, gbar), P.ppow(F, fbar, ps))
    if not h:
        return omega, None, ()
    delta, abar = _f_valuation(F, h, fbar, ps)
    if delta >= ps - ps1:
        return omega, delta, abar
    return min(omega, ps1 + delta), delta, abar


def _digit_vectors(fac, comp, length, cap):
    """All digit vectors of the given length with nonzero digit 0."""
    F = fac.ring.field
    qd = F.q**comp.d
    total = (qd - 1) * qd ** (length - 1)
    if total > cap:
        raise CapExceeded(f"G enumeration size {total} exceeds cap {cap}")
    digits = list(itertools.product(sorted(F.elements()), repeat=comp.d))
    zero_digit = tuple([F.zero] * comp.d)
    for head in digits:
        if head == zero_digit:
            continue
        for tail in itertools.product(digits, repeat=length - 1):
            yield (head,) + tail


def classify_ideals(fac, comp, cap=DEFAULT_CAP):
    """Yield every distinct ideal of K_j as an IdealSpec.

    For beta != 0 this is the chain <f^nu>, nu = 0..2p^s; for beta = 0 the
    Type I-IV list with kappa attached.
    """
    p, s = fac.p, fac.s
    ps, ps1 = p**s, p ** (s - 1)
    j = comp.j
    if not fac.beta_zero:
        for nu in range(2 * ps + 1):
            yield IdealSpec(kind="chain", j=j, nu=nu)
        return
    yield IdealSpec(kind="zero", j=j)
    yield IdealSpec(kind="unit", j=j)
    for tau in range(ps):
        yield IdealSpec(kind="II", j=j, tau=tau)
    for omega in range(1, ps):
        k0, _, _ = kappa(fac, comp, omega, 0, None)
        yield IdealSpec(kind="III", j=j, omega=omega, t=0, g_digits=None, kappa=k0)
        for mu in range(min(k0, omega)):
            yield IdealSpec(
                kind="IV", j=j, omega=omega, t=0, g_digits=None, mu=mu, kappa=k0
            )
        for t in range(omega):
            boundary = fac.char_p2 and omega == ps - ps1 + t
            # Type III, G != 0
            if not boundary:
                knb, _, _ = kappa(fac, comp, omega, t, ((None,),))
                if t < knb:
                    for v in _digit_vectors(fac, comp, knb - t, cap):
                        yield IdealSpec(
                            kind="III", j=j, omega=omega, t=t, g_digits=v, kappa=knb
                        )
            else:
                for v in _digit_vectors(fac, comp, omega - t, cap):
                    kv, _, _ = kappa(fac, comp, omega, t, v)
                    if t >= kv:
                        continue
                    zero_digit = tuple([fac.ring.field.zero] * comp.d)
                    if any(d != zero_digit for d in v[kv - t :]):
                        continue  # not the canonical form for this kappa
                    yield IdealSpec(
                        kind="III", j=j, omega=omega, t=t, g_digits=v, kappa=kv
                    )
            # Type IV, G != 0 (t < mu < kappa <= omega)
            for mu in range(t + 1, omega + 1):
                if mu >= ps:
                    break
                for v in _digit_vectors(fac, comp, mu - t, cap):
                    kv, _, _ = kappa(fac, comp, omega, t, v)
                    if mu < kv:
                        yield IdealSpec(
                            kind="IV", j=j, omega=omega, t=t, g_digits=v, mu=mu, kappa=kv
                        )


def census(fac, comp, cap=DEFAULT_CAP):
    """Exact count of distinct ideals of K_j grouped by type."""
    counts = {"I": 0, "II": 0, "III": 0, "IV": 0, "chain": 0}
    for spec in classify_ideals(fac, comp, cap=cap):
        if spec.kind == "chain":
            counts["chain"] += 1
        elif spec.kind in ("zero", "unit"):
            counts["I"] += 1
        else:
            counts[spec.kind] += 1
    counts["total"] = sum(counts.values())
    return counts


# ---------------------------------------------------------------------------
# Sizes, generators, duals
# ---------------------------------------------------------------------------


def ideal_size(fac, comp, spec):
    """Exact cardinality |I| = |Res_gamma(I)| * |Tor_gamma(I)|."""
    q, d, ps = fac.ring.q, comp.d, fac.p**fac.s
    if spec.kind == "zero":
        return 1
    if spec.kind == "unit":
        return q ** (2 * d * ps)
    if spec.kind == "chain":
        return q ** (d * (2 * ps - spec.nu))
    if spec.kind == "II":
        return q ** (d * (ps - spec.tau))
    if spec.kind == "III":
        return q ** (d * (2 * ps - spec.omega - spec.kappa))
    if spec.kind == "IV":
        return q ** (d * (2 * ps - spec.omega - spec.mu))
    raise ValueError(f"unclassified spec {spec!r}")


def ideal_generators(fac, comp, spec):
    """Generator polynomials of the ideal inside K_j (as R[x] polys)."""
    ring = fac.ring
    ps = fac.p**fac.s
    gamma_poly = P.const(ring, ring.gamma)
    if spec.kind == "zero":
        return []
    if spec.kind == "unit":
        return [(ring.one,)]
    if spec.kind == "chain":
        return [P.ppow(ring, comp.f, spec.nu)]
    if spec.kind == "II":
        return [P.pmul(ring, gamma_poly, P.ppow(ring, comp.f, spec.tau))]
    head = P.ppow(ring, comp.f, spec.omega)
    if spec.g_digits is not None:
        gpoly = g_ring_poly(fac, comp, spec.g_digits)
        tail = P.pmul(ring, P.ppow(ring, comp.f, spec.t), gpoly)
        head = P.padd(ring, head, P.pmul(ring, gamma_poly, tail))
    if spec.kind == "III":
        return [head]
    return [head, P.pmul(ring, gamma_poly, P.ppow(ring, comp.f, spec.mu))]


def monic_reciprocal(ring, f):
    """f*(x) scaled monic (requires f(0) to be a unit)."""
    fstar = P.reciprocal(f)
    return P.pscale(ring, ring.inverse(fstar[-1]), fstar)


def _x_pow_mod(ring, c, modulus):
    """x^c mod modulus, with negative c via the inverse of x."""
    if c >= 0:
        return P.pmod(ring, P.x_pow(ring, c), modulus)
    m0 = modulus[0]
    inv0 = ring.inverse(m0)
    h = P.pscale(ring, ring.neg(inv0), modulus[1:])
    assert P.pmod(ring, P.pmul(ring, P.x_pow(ring, 1), h), modulus) == (ring.one,)
    acc = (ring.one,)
    for _ in range(-c):
        acc = P.pmod(ring, P.pmul(ring, acc, h), modulus)
    return acc


def dual_ideal(fac, comp, spec):
    """Orthogonal complement of the ideal inside K_j-hat = R[x]/<k_j*>.

    Returns (generators, dual_modulus, dual_spec) where generators are R[x]
    polynomials reduced mod the monic dual modulus, and dual_spec is the
    classified IdealSpec of the dual in the chain case (None otherwise).
    """
    ring = fac.ring
    p, s = fac.p, fac.s
    ps, ps1 = p**s, p ** (s - 1)
    d = comp.d
    kstar = monic_reciprocal(ring, comp.k_red)
    fstar = P.reciprocal(comp.f)
    gamma_poly = P.const(ring, ring.gamma)

    def fsp(e):
        return P.pmod(ring, P.ppow(ring, fstar, e), kstar)

    def gam_term(xc, fe, upoly):
        """gamma * x^xc * fstar^fe * upoly mod kstar."""
        t = P.pmul(ring, _x_pow_mod(ring, xc, kstar), fsp(fe))
        t = P.pmod(ring, P.pmul(ring, t, upoly), kstar)
        return P.pmul(ring, gamma_poly, t)

    if spec.kind == "zero":
        return [(ring.one,)], kstar, IdealSpec(kind="unit", j=spec.j)
    if spec.kind == "unit":
        return [], kstar, IdealSpec(kind="zero", j=spec.j)
    if spec.kind == "chain":
        nu = 2 * ps - spec.nu
        return [fsp(nu)], kstar, IdealSpec(kind="chain", j=spec.j, nu=nu)
    if spec.kind == "II":
        return [fsp(ps - spec.tau), gamma_poly], kstar, None

    omega, t = spec.omega, spec.t
    g_zero = spec.g_digits is None
    if not g_zero:
        gpoly = g_ring_poly(fac, comp, spec.g_digits)
        gstar = P.reciprocal(gpoly)
        cg = d * omega - d * t - P.deg(gpoly)
    if fac.char_p2 and comp.mbar:
        mstar = P.reciprocal(P.poly_teich_lift(ring, comp.mbar))
        cm = d * ps - d * ps1 - P.deg(comp.mbar)
    _, delta, abar = (None, None, None)
    boundary = fac.char_p2 and not g_zero and omega == ps - ps1 + t
    if boundary:
        _, delta, abar = kappa(fac, comp, omega, t, spec.g_digits)
        if abar:
            astar = P.reciprocal(P.poly_teich_lift(ring, abar))
            ca = d * ps - d * ps1 - d * delta - P.deg(P.trim(ring.field, abar))

    if spec.kind == "III":
        if not fac.char_p2:
            if g_zero:
                return [fsp(ps - omega)], kstar, None
            if ps - 2 * omega + t >= 0:
                gen = P.psub(
                    ring, fsp(ps - omega), gam_term(cg, ps - 2 * omega + t, gstar)
                )
                return [gen], kstar, None
            gen = P.psub(ring, fsp(omega - t), gam_term(cg, 0, gstar))
            return [gen, P.pmul(ring, gamma_poly, fsp(ps - omega))], kstar, None
        # char p^2
        if g_zero:
            if omega <= ps1:
                gen = P.padd(ring, fsp(ps - omega), gam_term(cm, ps1 - omega, mstar))
                return [gen], kstar, None
            gen = P.padd(ring, fsp(ps - ps1), gam_term(cm, 0, mstar))
            return [gen, P.pmul(ring, gamma_poly, fsp(ps - omega))], kstar, None
        if not boundary:
            if ps - ps1 + t - omega > 0 and omega > ps1:
                gen = P.psub(
                    ring,
                    P.padd(ring, fsp(ps - ps1), gam_term(cm, 0, mstar)),
                    gam_term(cg, ps + t - omega - ps1, gstar),
                )
                return [gen, P.pmul(ring, gamma_poly, fsp(ps - omega))], kstar, None
            if ps - ps1 + t - omega > 0 and omega <= ps1:
                gen = P.psub(
                    ring,
                    P.padd(ring, fsp(ps - omega), gam_term(cm, ps1 - omega, mstar)),
                    gam_term(cg, ps + t - 2 * omega, gstar),
                )
                return [gen], kstar, None
            # ps - ps1 + t - omega < 0 here
            if ps - 2 * omega + t >= 0:
                raise AssertionError(
                    "vacuous Type III dual branch reached (t-omega between "
                    "p^{s-1}-p^s and -p^s+2*... cannot happen)"
                )
            gen = P.psub(
                ring,
                P.padd(ring, fsp(omega - t), gam_term(cm, ps1 + omega - t - ps, mstar)),
                gam_term(cg, 0, gstar),
            )
            return [gen, P.pmul(ring, gamma_poly, fsp(ps - omega))], kstar, None
        # boundary: omega = ps - ps1 + t
        if abar is None or not abar or (delta is not None and delta >= ps - ps1):
            return [fsp(ps - omega)], kstar, None
        if omega - ps1 <= delta:
            gen = P.padd(ring, fsp(ps - omega), gam_term(ca, ps1 - omega + delta, astar))
            return [gen], kstar, None
        gen = P.padd(ring, fsp(ps - ps1 - delta), gam_term(ca, 0, astar))
        return [gen, P.pmul(ring, gamma_poly, fsp(ps - omega))], kstar, None

    # Type IV
    mu = spec.mu
    tor_gen = P.pmul(ring, gamma_poly, fsp(ps - omega))
    if not fac.char_p2:
        if g_zero:
            return [fsp(ps - mu), tor_gen], kstar, None
        gen = P.psub(ring, fsp(ps - mu), gam_term(cg, ps - mu - omega + t, gstar))
        return [gen, tor_gen], kstar, None
    if g_zero:
        if ps - ps1 - omega + mu <= 0:
            return [fsp(ps - mu), tor_gen], kstar, None
        gen = P.padd(ring, fsp(ps - mu), gam_term(cm, ps1 - mu, mstar))
        return [gen, tor_gen], kstar, None
    if not boundary:
        gen = P.psub(
            ring,
            P.padd(ring, fsp(ps - mu), gam_term(cm, ps1 - mu, mstar)),
            gam_term(cg, ps - mu + t - omega, gstar),
        )
        return [gen, tor_gen], kstar, None
    if abar is None or not abar or (delta is not None and delta >= ps - ps1):
        return [fsp(ps - mu), tor_gen], kstar, None
    gen = P.padd(ring, fsp(ps - mu), gam_term(ca, ps1 - mu + delta, astar))
    return [gen, tor_gen], kstar, None


# ---------------------------------------------------------------------------
# CRT composition over all components
# ---------------------------------------------------------------------------


def crt_idempotents(ring, moduli, big_modulus):
    """Idempotents e_j with e_j = 1 mod moduli[j], 0 mod the others."""
    eps = []
    for j, mj in enumerate(moduli):
        rest = (ring.one,)
        for i, mi in enumerate(moduli):
            if i != j:
                rest = P.pmul(ring, rest, mi)
        _, b = P.bezout(ring, mj, rest)
        eps.append(P.pmod(ring, P.pmul(ring, b, rest), big_modulus))
    total = ()
    for e in eps:
        total = P.padd(ring, total, e)
    assert P.pmod(ring, P.psub(ring, total, (ring.one,)), big_modulus) == ()
    return eps


@dataclass(frozen=True)
class CodeSpec:
    """A constacyclic code as a CRT tuple of component ideals."""

    fac: Factorization
    specs: tuple  # one IdealSpec per component, in order


def code_size(code):
    out = 1
    for comp, spec in zip(code.fac.components, code.specs):
        out *= ideal_size(code.fac, comp, spec)
    return out


def code_generators(code):
    """Generators of the code inside R[x]/<x^N - lambda>."""
    fac = code.fac
    ring = fac.ring
    big = P.xn_minus(ring, fac.N, fac.lam)
    eps = crt_idempotents(ring, [c.k_red for c in fac.components], big)
    gens = []
    for comp, spec, e in zip(fac.components, code.specs, eps):
        for g in ideal_generators(fac, comp, spec):
            gens.append(P.pmod(ring, P.pmul(ring, e, g), big))
    return gens, big


def code_dual(code):
    """Generators of the dual code inside R[x]/<x^N - lambda^{-1}>."""
    fac = code.fac
    ring = fac.ring
    lam_inv = ring.inverse(fac.lam)
    big = P.xn_minus(ring, fac.N, lam_inv)
    moduli = [monic_reciprocal(ring, c.k_red) for c in fac.components]
    eps = crt_idempotents(ring, moduli, big)
    gens = []
    dual_specs = []
    for comp, spec, e in zip(fac.components, code.specs, eps):
        dgens, _, dspec = dual_ideal(fac, comp, spec)
        dual_specs.append(dspec)
        for g in dgens:
            gens.append(P.pmod(ring, P.pmul(ring, e, g), big))
    return gens, big, dual_specs


# ---------------------------------------------------------------------------
# General-e unit case and isodual families
# ---------------------------------------------------------------------------


def unit_case_chain(ring, n, s, lam):
    """Chain lattice of R[x]/<x^{np^s}-lambda> when the gamma-part is a unit.

    Requires lambda = theta + gamma*omega with omega a unit and x^n - theta_0
    irreducible over the residue field; returns the full ideal list with
    sizes and dual generators per the chain-ring structure theorems.
    """
    if n % ring.p == 0:
        raise ValueError("n must be coprime to p")
    theta, omega_elem = decompose_unit(ring, lam)
    if not ring.is_unit(omega_elem):
        raise ValueError("gamma-part of lambda must be a unit for the chain case")
    lam0 = teich_root(ring, theta, s)
    F = ring.field
    fbars = P.factor_xn_minus_a(F, n, ring.residue(lam0))
    if len(fbars) != 1:
        raise ValueError("x^n - lambda_0 must be irreducible over the residue field")
    e, ps = ring.e, ring.p**s
    big_n = n * ps
    f = P.xn_minus(ring, n, lam0)
    lam0_inv = ring.inverse(lam0)
    fdual = P.xn_minus(ring, n, lam0_inv)
    ideals = []
    for nu in range(e * ps + 1):
        ideals.append(
            {
                "nu": nu,
                "generator": P.ppow(ring, f, nu),
                "size": ring.q ** (n * (e * ps - nu)),
                "dual_generator": P.ppow(ring, fdual, e * ps - nu),
            }
        )
    return {
        "lam0": lam0,
        "modulus": P.xn_minus(ring, big_n, lam),
        "dual_modulus": P.xn_minus(ring, big_n, ring.inverse(lam)),
        "ideals": ideals,
    }


def isodual_codes(ring, n, s, lam, cap=DEFAULT_CAP):
    """The isodual families for x^n - alpha_0 irreducible (e = 2).

    Emits CodeSpec-like entries {spec, generators...} per the closed-form
    corollaries: beta != 0 gives exactly <gamma>; beta = 0 gives the Type
    II/III/IV families depending on the characteristic.
    """
    fac = lemma_fac(ring, n, s, lam)
    if fac.r != 1:
        raise ValueError("isodual classification requires x^n - alpha_0 irreducible")
    comp = fac.components[0]
    p, ps, ps1 = fac.p, fac.p**fac.s, fac.p ** (fac.s - 1)
    out = []
    if not fac.beta_zero:
        out.append(IdealSpec(kind="chain", j=1, nu=ps))
        return fac, out
    # Type II: <gamma> only
    out.append(IdealSpec(kind="II", j=1, tau=0))
    char2 = (p == 2) and not fac.char_p2
    char4 = (p == 2) and fac.char_p2
    if char2 or char4:
        k0, _, _ = kappa(fac, comp, ps1, 0, None)
        out.append(IdealSpec(kind="III", j=1, omega=ps1, t=0, g_digits=None, kappa=k0))
    for spec in classify_ideals(fac, comp, cap=cap):
        if spec.kind == "III" and spec.g_digits is not None:
            if char2 and (
                spec.omega == ps1 or (spec.omega > ps1 and spec.t == 0)
            ):
                out.append(spec)
            elif char4 and spec.omega == ps1 and spec.t >= 1:
                out.append(spec)
        elif spec.kind == "IV":
            if spec.mu != ps - spec.omega:
                continue
            if char2 and ps1 < spec.omega < ps:
                out.append(spec)
            elif spec.g_digits is None:
                if char2:
                    pass  # already covered above
                elif not fac.char_p2 and 2 * spec.omega > ps:
                    out.append(spec)
                elif fac.char_p2 and 2 * spec.omega >= 2 * ps - ps1:
                    out.append(spec)
    return fac, out
