"""Closed-form Hamming and Rosenbloom-Tsfasman (RT) distances and RT weight
distributions for constacyclic codes of length n*p^s.

All formulas assume x^n - alpha_0 irreducible over the residue field (so the
component ring is the whole ambient, d = n).  Keys into the classical
repeated-root distance table are: nu - (e-1)p^s in the chain case, and tau /
kappa / mu for Type II / III / IV ideals in the beta = 0 case.
"""

from __future__ import annotations


def d_H_field(upsilon, p, s):
    """Hamming distance of <(x^n - a)^upsilon> in F[x]/<x^{np^s} - a^{p^s}>."""
    ps = p**s
    if not 0 <= upsilon <= ps:
        raise ValueError("upsilon out of range")
    if upsilon == 0:
        return 1
    if upsilon == ps:
        return 0
    for ell in range(p - 1):
        if ell * p ** (s - 1) + 1 <= upsilon <= (ell + 1) * p ** (s - 1):
            return ell + 2
    for k in range(1, s):
        for i in range(1, p):
            lo = ps - p ** (s - k) + (i - 1) * p ** (s - k - 1) + 1
            hi = ps - p ** (s - k) + i * p ** (s - k - 1)
            if lo <= upsilon <= hi:
                return (i + 1) * p**k
    raise AssertionError("distance table has no gaps")


def d_H_unit(nu, p, s, e):
    """Hamming distance of <(x^n - lambda_0)^nu>, chain case, 0 <= nu <= ep^s."""
    ps = p**s
    if not 0 <= nu <= e * ps:
        raise ValueError("nu out of range")
    if nu <= (e - 1) * ps:
        return 1
    return d_H_field(nu - (e - 1) * ps, p, s)


def d_H_beta0(spec, p, s):
    """Hamming distance of a Type I-IV ideal (beta = 0, e = 2)."""
    key = _table_key(spec)
    if key is None:
        return 0  # zero code
    return d_H_field(key, p, s)


def d_RT_unit(nu, p, s, e, n):
    """RT distance of <(x^n - lambda_0)^nu>, chain case."""
    ps = p**s
    if not 0 <= nu <= e * ps:
        raise ValueError("nu out of range")
    if nu == e * ps:
        return 0
    if nu <= (e - 1) * ps:
        return 1
    return n * nu - n * (e - 1) * ps + 1


def d_RT_beta0(spec, p, s, n):
    """RT distance of a Type I-IV ideal (beta = 0, e = 2)."""
    key = _table_key(spec)
    if key is None:
        return 0
    return n * key + 1


def _table_key(spec):
    """The exponent that drives both distance tables, or None for {0}."""
    if spec.kind == "zero":
        return None
    if spec.kind == "unit":
        return 0
    if spec.kind == "II":
        return spec.tau
    if spec.kind == "III":
        return spec.kappa
    if spec.kind == "IV":
        return spec.mu
    raise ValueError(f"no distance key for spec kind {spec.kind!r}")


def rt_wdist_unit(nu, p, s, e, m, n):
    """RT weight distribution (A_0..A_{np^s}) of <(x^n - lambda_0)^nu>."""
    ps = p**s
    big_n = n * ps
    if not 0 <= nu <= e * ps:
        raise ValueError("nu out of range")
    A = [0] * (big_n + 1)
    A[0] = 1
    if nu == e * ps:
        return tuple(A)
    if nu % ps == 0:
        y = nu // ps
        for rho in range(1, big_n + 1):
            A[rho] = (p ** (m * (e - y)) - 1) * p ** (m * (e - y) * (rho - 1))
        return tuple(A)
    b = nu // ps + 1
    cut = n * nu - n * (b - 1) * ps
    for rho in range(1, big_n + 1):
        if rho <= cut:
            A[rho] = (p ** (m * (e - b)) - 1) * p ** (m * (e - b) * (rho - 1))
        else:
            A[rho] = p ** (m * (rho - cut - 1)) * (
                (p**m - 1) * p ** (m * (e - b) * rho)
                + (p ** (m * (e - b)) - 1) * p ** (m * (e - b) * (rho - 1))
            )
    return tuple(A)


def rt_wdist_beta0(spec, p, s, m, n):
    """RT weight distribution of a Type I-IV ideal (beta = 0, e = 2)."""
    ps = p**s
    big_n = n * ps
    A = [0] * (big_n + 1)
    A[0] = 1
    if spec.kind == "zero":
        return tuple(A)
    if spec.kind == "unit":
        for rho in range(1, big_n + 1):
            A[rho] = (p ** (2 * m) - 1) * p ** (2 * m * (rho - 1))
        return tuple(A)
    if spec.kind == "II":
        cut = n * spec.tau
        for rho in range(cut + 1, big_n + 1):
            A[rho] = (p**m - 1) * p ** (m * (rho - cut - 1))
        return tuple(A)
    if spec.kind in ("III", "IV"):
        low = n * (spec.kappa if spec.kind == "III" else spec.mu)
        high = n * spec.omega
        for rho in range(low + 1, high + 1):
            A[rho] = (p**m - 1) * p ** (m * (rho - low - 1))
        for rho in range(high + 1, big_n + 1):
            A[rho] = (p ** (2 * m) - 1) * p ** (m * (2 * rho - high - low - 2))
        return tuple(A)
    raise ValueError(f"no RT distribution for spec kind {spec.kind!r}")
