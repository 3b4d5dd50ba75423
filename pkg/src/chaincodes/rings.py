"""Exact arithmetic in finite chain rings and their residue fields.

Two families are supported:

* ``"gr"``  -- the Galois ring GR(p^e, m) = Z_{p^e}[y]/<h(y)>, maximal ideal
  generated by gamma = p, characteristic p^e.  Elements are tuples of m
  integers in [0, p^e), coordinates with respect to the lifted modulus h.
* ``"fu"``  -- F_{p^m}[u]/<u^e>, maximal ideal generated by gamma = u,
  characteristic p.  Elements are tuples of e residue-field elements
  (the u-adic coordinates), each itself a tuple of m integers in [0, p).

All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class NonUnitError(ArithmeticError):
    """Raised when inverting an element with zero residue."""


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


class ResidueField:
    """The field F_{p^m} = F_p[y]/<modulus>, elements as coefficient tuples."""

    def __init__(self, p, m, modulus):
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self.zero = (0,) * m
        self.one = ((1,) + (0,) * (m - 1)) if m else ()
        if not _irreducible_mod_p(modulus, p):
            raise ValueError("modulus is reducible over F_p")

    def __eq__(self, other):
        return (
            isinstance(other, ResidueField)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"ResidueField(p={self.p}, m={self.m})"

    def from_int(self, v):
        return ((v % self.p,) + (0,) * (self.m - 1))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, m, mod = self.p, self.m, self.modulus
        c = [0] * (2 * m - 1) if m > 1 else [a[0] * b[0] % p]
        if m > 1:
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        c[i + j] += x * y
            for i in range(2 * m - 2, m - 1, -1):
                t = c[i] % p
                if t:
                    for k in range(m):
                        c[i - m + k] -= t * mod[k]
                c[i] = 0
        return tuple(x % p for x in c[:m])

    def pow(self, a, k):
        r = self.one
        b = a
        while k:
            if k & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            k >>= 1
        return r

    def inverse(self, a):
        if a == self.zero:
            raise NonUnitError("zero has no inverse")
        return self.pow(a, self.q - 2)

    def is_unit(self, a):
        return a != self.zero

    def elements(self):
        return (t for t in itertools.product(range(self.p), repeat=self.m))

    def generator(self):
        """Lexicographically first multiplicative generator of F_q^*."""
        if not hasattr(self, "_gen"):
            n = self.q - 1
            primes = {f for f in _prime_factors(n)}
            for cand in self.elements():
                if cand == self.zero:
                    continue
                if all(self.pow(cand, n // f) != self.one for f in primes):
                    self._gen = cand
                    break
        return self._gen


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_divides_mod_p(d, f, p):
    """Whether monic d divides f over F_p (dense int tuples, ascending)."""
    f = list(f)
    dd = len(d) - 1
    for i in range(len(f) - 1, dd - 1, -1):
        c = f[i] % p
        if c:
            for k in range(dd + 1):
                f[i - dd + k] = (f[i - dd + k] - c * d[k]) % p
    return all(c % p == 0 for c in f)


def _irreducible_mod_p(f, p):
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if _poly_divides_mod_p(tail + (1,), f, p):
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p, m):
    """Lexicographically first monic irreducible of degree m over F_p."""
    if m == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=m):
        cand = tail + (1,)
        if _irreducible_mod_p(cand, p):
            return cand
    raise AssertionError("no irreducible found")


class ChainRing:
    """A chain ring from one of the two supported families.

    Exposes the arithmetic protocol (`zero`, `one`, `add`, `sub`, `neg`,
    `mul`, `is_unit`, `inverse`) shared with :class:`ResidueField`, plus the
    gamma-adic structure (Teichmuller set, digits, gamma division).
    """

    def __init__(self, family, p, e, m, modulus=None):
        if family not in ("gr", "fu"):
            raise ValueError("family must be 'gr' or 'fu'")
        if not _is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if e < 2:
            raise ValueError("nilpotency index e must be >= 2")
        if m < 1:
            raise ValueError("residue degree m must be >= 1")
        if modulus is None:
            modulus = default_modulus(p, m)
        self.family = family
        self.p = p
        self.e = e
        self.m = m
        self.field = ResidueField(p, m, modulus)
        self.modulus = self.field.modulus
        self.q = p**m
        self.cardinality = p ** (m * e)
        if family == "gr":
            self.char = p**e
            pe = self.char
            self.zero = (0,) * m
            self.one = ((1,) + (0,) * (m - 1))
            self.gamma = ((p % pe,) + (0,) * (m - 1))
            self.z = self.one
            # number of Z_char coordinates per element (oracle flat view)
            self.coord_len = m
            self.coord_mod = pe
        else:
            self.char = p
            fz, fo = self.field.zero, self.field.one
            self.zero = (fz,) * e
            self.one = (fo,) + (fz,) * (e - 1)
            self.gamma = (fz, fo) + (fz,) * (e - 2)
            self.z = None
            self.coord_len = m * e
            self.coord_mod = p
        self._teich = None

    def __eq__(self, other):
        return isinstance(other, ChainRing) and (
            (self.family, self.p, self.e, self.m, self.modulus)
            == (other.family, other.p, other.e, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.family, self.p, self.e, self.m, self.modulus))

    def __repr__(self):
        if self.family == "gr":
            return f"GR({self.p}^{self.e}, {self.m})"
        return f"F_{self.q}[u]/u^{self.e}"

    # -- basic arithmetic ---------------------------------------------------

    def from_int(self, v):
        if self.family == "gr":
            return ((v % self.char,) + (0,) * (self.m - 1))
        return (self.field.from_int(v),) + (self.field.zero,) * (self.e - 1)

    def add(self, a, b):
        if self.family == "gr":
            pe = self.char
            return tuple((x + y) % pe for x, y in zip(a, b))
        F = self.field
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        if self.family == "gr":
            pe = self.char
            return tuple((x - y) % pe for x, y in zip(a, b))
        F = self.field
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        if self.family == "gr":
            pe = self.char
            return tuple((-x) % pe for x in a)
        F = self.field
        return tuple(F.neg(x) for x in a)

    def mul(self, a, b):
        if self.family == "gr":
            pe, m, mod = self.char, self.m, self.modulus
            if m == 1:
                return (a[0] * b[0] % pe,)
            c = [0] * (2 * m - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        c[i + j] += x * y
            for i in range(2 * m - 2, m - 1, -1):
                t = c[i] % pe
                if t:
                    for k in range(m):
                        c[i - m + k] -= t * mod[k]
                c[i] = 0
            return tuple(x % pe for x in c[:m])
        F, e = self.field, self.e
        out = [F.zero] * e
        for i in range(e):
            if a[i] == F.zero:
                continue
            for j in range(e - i):
                out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]))
        return tuple(out)

    def pow(self, a, k):
        r = self.one
        b = a
        while k:
            if k & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            k >>= 1
        return r

    # -- residue structure ----------------------------------------------------

    def residue(self, a):
        if self.family == "gr":
            p = self.p
            return tuple(x % p for x in a)
        return a[0]

    def lift(self, fbar):
        """The coordinatewise (non-Teichmuller) lift of a field element."""
        if self.family == "gr":
            return tuple(fbar)
        return (tuple(fbar),) + (self.field.zero,) * (self.e - 1)

    def is_unit(self, a):
        return self.residue(a) != self.field.zero

    def inverse(self, a):
        if not self.is_unit(a):
            raise NonUnitError(f"{a} is not a unit")
        b = self.lift(self.field.inverse(self.residue(a)))
        two = self.from_int(2)
        # Newton iteration b <- b(2 - ab) converges gamma-adically.
        for _ in range(self.e.bit_length() + 1):
            b = self.mul(b, self.sub(two, self.mul(a, b)))
        assert self.mul(a, b) == self.one
        return b

    # -- Teichmuller / gamma-adic structure -----------------------------------

    def teich_lift(self, fbar):
        """The Teichmuller representative with residue fbar."""
        t = self.lift(fbar)
        for _ in range(self.e):
            nt = self.pow(t, self.q)
            if nt == t:
                break
            t = nt
        assert self.pow(t, self.q) == t
        return t

    def _build_teich(self):
        F = self.field
        zeta_bar = F.generator()
        zeta = self.teich_lift(zeta_bar)
        elems = [self.zero, self.one]
        logs = {self.one: 0}
        t = self.one
        for i in range(1, F.q - 1):
            t = self.mul(t, zeta)
            elems.append(t)
            logs[t] = i
        by_residue = {self.residue(t): t for t in elems}
        self._teich = (tuple(elems), logs, by_residue, zeta)

    def teichmuller_set(self):
        """T_e = {0, 1, zeta, ..., zeta^{q-2}} in generator-power order."""
        if self._teich is None:
            self._build_teich()
        return self._teich[0]

    def teich_log(self, t):
        """Exponent i with t = zeta^i, for nonzero t in the Teichmuller set."""
        if self._teich is None:
            self._build_teich()
        logs = self._teich[1]
        if t not in logs:
            raise ValueError("element is not a nonzero Teichmuller representative")
        return logs[t]

    def teich_by_residue(self, fbar):
        if self._teich is None:
            self._build_teich()
        return self._teich[2][fbar]

    def gamma_pow_mul(self, a, k):
        """a * gamma^k."""
        if k == 0:
            return a
        if k >= self.e:
            return self.zero
        if self.family == "gr":
            pk = self.p**k
            pe = self.char
            return tuple((x * pk) % pe for x in a)
        fz = self.field.zero
        return (fz,) * k + a[: self.e - k]

    def gamma_divide(self, a, k):
        """The b with a = gamma^k * b and b's digits shifted down (exact)."""
        if self.family == "gr":
            pk = self.p**k
            if any(x % pk for x in a):
                raise ValueError("element not divisible by gamma^k")
            return tuple(x // pk for x in a)
        fz = self.field.zero
        if any(x != fz for x in a[:k]):
            raise ValueError("element not divisible by gamma^k")
        return a[k:] + (fz,) * k

    def gamma_adic(self, a):
        """Teichmuller digits (r_0, ..., r_{e-1}) with a = sum r_i gamma^i."""
        if self._teich is None:
            self._build_teich()
        by_res = self._teich[2]
        digits = []
        v = a
        for i in range(self.e):
            r = by_res[self.residue(v)]
            digits.append(r)
            v = self.gamma_divide(self.sub(v, r), 1)
        assert v == self.zero or self.family == "gr"
        return tuple(digits)

    def from_digits(self, digits):
        acc = self.zero
        for i, r in enumerate(digits):
            acc = self.add(acc, self.gamma_pow_mul(r, i))
        return acc

    def elements(self):
        if self.family == "gr":
            return (t for t in itertools.product(range(self.char), repeat=self.m))
        felems = list(self.field.elements())
        return (t for t in itertools.product(felems, repeat=self.e))

    # -- flat integer coordinates (used by the oracle) -------------------------

    def coords(self, a):
        """Flat tuple of ints modulo `coord_mod`, Z-linear in the element."""
        if self.family == "gr":
            return a
        return tuple(c for comp in a for c in comp)

    def from_coords(self, cs):
        if self.family == "gr":
            return tuple(c % self.char for c in cs)
        m = self.m
        return tuple(
            tuple(c % self.p for c in cs[i * m : (i + 1) * m]) for i in range(self.e)
        )

    def scalar_basis(self):
        """Ring elements whose Z_{coord_mod}-span is the whole ring."""
        out = []
        for k in range(self.coord_len):
            cs = [0] * self.coord_len
            cs[k] = 1
            out.append(self.from_coords(cs))
        return out


def make_ring(family, p, e, m, modulus=None):
    """Construct a validated chain ring (see :class:`ChainRing`)."""
    return ChainRing(family, p, e, m, modulus)


def teich_root(ring, alpha, s):
    """The unique alpha_0 in T_e with alpha_0^{p^s} = alpha (alpha nonzero)."""
    i = ring.teich_log(alpha)  # raises if not a nonzero Teichmuller element
    n = ring.q - 1
    if n == 1:
        return ring.one
    sigma = pow(ring.p**s % n, -1, n)
    zeta = ring._teich[3]
    root = ring.pow(zeta, (i * sigma) % n)
    assert ring.pow(root, ring.p**s) == alpha
    return root


def decompose_unit(ring, lam):
    """gamma-adic split of a unit: (alpha, beta) for e=2, else (theta, omega).

    For e = 2 returns the unique alpha in T_2 \\ {0}, beta in T_2 with
    lam = alpha + gamma*beta.  For general e returns theta = digit 0 and
    omega = (lam - theta)/gamma together with an `omega_unit` flag.
    """
    if not ring.is_unit(lam):
        raise NonUnitError("lambda must be a unit")
    digits = ring.gamma_adic(lam)
    theta = digits[0]
    if ring.e == 2:
        return theta, digits[1]
    omega = ring.gamma_divide(ring.sub(lam, theta), 1)
    return theta, omega
