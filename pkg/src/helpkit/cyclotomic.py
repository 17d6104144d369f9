"""Exact arithmetic in rings of cyclotomic integers Z[zeta_n].

Values are stored in the power basis of Q(zeta_n) after reduction modulo the
n-th cyclotomic polynomial, with the conductor kept minimal so that equality
and rationality tests are cheap.  Everything is arbitrary-precision integer
arithmetic; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Rational = Fraction

__all__ = [
    "CycInt",
    "NonDivisibleConductor",
    "CycParseError",
    "Rational",
    "cyclotomic_polynomial",
    "euler_phi",
    "moebius",
    "root_trace",
    "parse_cyc",
    "render_cyc",
]


class NonDivisibleConductor(ValueError):
    """Raised when embedding into a field whose conductor is not a multiple."""


class CycParseError(ValueError):
    """Raised on malformed cyclotomic value strings."""


def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def moebius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def prime_factors(n: int) -> list[int]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Computed as the exact quotient of x^n - 1 by the product of Phi_d over
    proper divisors d of n.
    """
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in divisors(n):
        if d == n:
            continue
        num = _poly_div_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials; den is monic by construction.
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[k + dd]
        if c:
            quot[k] = c
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return quot


def _reduce_mod_phi(coeffs: dict[int, int], n: int) -> dict[int, int]:
    """Reduce exponents into [0, n), then the polynomial modulo Phi_n."""
    if n == 1:
        return {0: sum(coeffs.values())} if coeffs else {}
    dense: dict[int, int] = {}
    for e, c in coeffs.items():
        if c:
            e %= n
            dense[e] = dense.get(e, 0) + c
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    top = max(dense, default=-1)
    while top >= deg:
        c = dense.get(top, 0)
        if c:
            shift = top - deg
            for i, pc in enumerate(phi):
                if pc:
                    k = i + shift
                    v = dense.get(k, 0) - c * pc
                    if v:
                        dense[k] = v
                    else:
                        dense.pop(k, None)
        top -= 1
    return {e: c for e, c in dense.items() if c}


class CycInt:
    """A cyclotomic integer: conductor n plus integer coefficients on zeta_n^e.

    Instances are immutable; arithmetic returns new values whose conductor is
    the smallest m | n supporting the value.
    """

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coeffs: dict[int, int], *, _canonical: bool = False):
        if n < 1:
            raise ValueError("conductor must be positive")
        if not _canonical:
            coeffs = _reduce_mod_phi(coeffs, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CycInt is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(v: int) -> "CycInt":
        return CycInt(1, {0: v} if v else {}, _canonical=True)

    @staticmethod
    def root(n: int, e: int = 1) -> "CycInt":
        """zeta_n^e, conductor-minimized."""
        return CycInt(n, {e % n: 1}).minimize()

    @staticmethod
    def zero() -> "CycInt":
        return CycInt.from_int(0)

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def is_rational(self) -> bool:
        return set(self.c) <= {0}

    def rational_value(self) -> int:
        if not self.is_rational():
            raise ValueError("value is not rational")
        return self.c.get(0, 0)

    # -- conductor handling ---------------------------------------------

    def embed(self, m: int) -> "CycInt":
        """Rewrite in the conductor-m basis; requires n | m.

        The result is not conductor-minimized: this is the explicit
        up-embedding Q(zeta_n) -> Q(zeta_m).
        """
        if m % self.n:
            raise NonDivisibleConductor(f"{self.n} does not divide {m}")
        if m == self.n:
            return self
        k = m // self.n
        return CycInt(m, {e * k: c for e, c in self.c.items()})

    def minimize(self) -> "CycInt":
        """Descend to the smallest conductor m | n supporting the value."""
        cur = self
        changed = True
        while changed and cur.n > 1:
            changed = False
            if cur.is_rational():
                return CycInt.from_int(cur.c.get(0, 0))
            for p in prime_factors(cur.n):
                down = cur._descend(p)
                if down is not None:
                    cur = down
                    changed = True
                    break
        return cur

    def _descend(self, p: int) -> "CycInt | None":
        """Try to rewrite with conductor n/p; None if the value is not there."""
        n = self.n
        m = n // p
        if m % p == 0:
            # p^2 | n: the canonical basis splits by exponent residue mod p,
            # and Q(zeta_m) is exactly the residue-0 slice.
            if any(e % p for e in self.c):
                return None
            return CycInt(m, {e // p: c for e, c in self.c.items()}, _canonical=True)
        # p || n: split each monomial over zeta_p^i * zeta_m^j via CRT and
        # redistribute zeta_p^(p-1) = -(1 + zeta_p + ... + zeta_p^(p-2)).
        if m == 1:
            val = self.trace_to_rational_if_constant(p)
            return CycInt.from_int(val) if val is not None else None
        inv_m_mod_p = pow(m % p, -1, p)
        inv_p_mod_m = pow(p % m, -1, m)
        slices: list[dict[int, int]] = [dict() for _ in range(p)]
        for e, c in self.c.items():
            i = (e * inv_m_mod_p) % p
            j = (e * inv_p_mod_m) % m
            slices[i][j] = slices[i].get(j, 0) + c
        top = slices[p - 1]
        if top:
            for i in range(p - 1):
                for j, c in top.items():
                    slices[i][j] = slices[i].get(j, 0) - c
        base = _reduce_mod_phi(slices[0], m)
        for i in range(1, p - 1):
            if _reduce_mod_phi(slices[i], m):
                return None
        return CycInt(m, base, _canonical=True)

    def trace_to_rational_if_constant(self, p: int) -> int | None:
        # conductor exactly p: rational iff all non-zero exponents share one
        # coefficient c, in which case the value is c0 - c.
        c0 = self.c.get(0, 0)
        rest = {e: c for e, c in self.c.items() if e}
        if not rest:
            return c0
        vals = set(rest.values())
        if len(vals) == 1 and len(rest) == p - 1:
            return c0 - vals.pop()
        return None

    # -- arithmetic ------------------------------------------------------

    def _common(self, other: "CycInt") -> tuple["CycInt", "CycInt", int]:
        n = self.n * other.n // gcd(self.n, other.n)
        return self.embed(n), other.embed(n), n

    def __add__(self, other: "CycInt") -> "CycInt":
        a, b, n = self._common(other)
        out = dict(a.c)
        for e, c in b.c.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return CycInt(n, out, _canonical=True).minimize()

    def __neg__(self) -> "CycInt":
        return CycInt(self.n, {e: -c for e, c in self.c.items()}, _canonical=True)

    def __sub__(self, other: "CycInt") -> "CycInt":
        return self + (-other)

    def __mul__(self, other: "CycInt") -> "CycInt":
        a, b, n = self._common(other)
        out: dict[int, int] = {}
        for e1, c1 in a.c.items():
            for e2, c2 in b.c.items():
                e = (e1 + e2) % n
                out[e] = out.get(e, 0) + c1 * c2
        return CycInt(n, out).minimize()

    def scale(self, k: int) -> "CycInt":
        if k == 0:
            return CycInt.zero()
        return CycInt(self.n, {e: k * c for e, c in self.c.items()}, _canonical=True)

    def galois(self, t: int) -> "CycInt":
        """Apply sigma_t : zeta_n -> zeta_n^t (t must be coprime to n)."""
        if gcd(t, self.n) != 1:
            raise ValueError("galois automorphism needs t coprime to the conductor")
        return CycInt(self.n, {(e * t) % self.n: c for e, c in self.c.items()})

    def conjugate(self) -> "CycInt":
        return self.galois(self.n - 1) if self.n > 1 else self

    # -- trace ----------------------------------------------------------

    def trace(self, within: int | None = None) -> Fraction:
        """Galois trace down to Q, extended linearly from root_trace.

        The trace is taken over Q(zeta_m) with m = `within` (defaulting to
        the stored conductor); the choice of field scales rational parts by
        the field degree, so comparisons must fix it.
        """
        x = self if within is None else self.embed(within)
        return Fraction(sum(c * root_trace(x.n, e) for e, c in x.c.items()))

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(other)
        if not isinstance(other, CycInt):
            return NotImplemented
        a, b, _ = self._common(other)
        return a.c == b.c

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            k = self.minimize()
            h = hash((k.n, tuple(sorted(k.c.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"CycInt({render_cyc(self)!r})"


@lru_cache(maxsize=None)
def root_trace(n: int, j: int) -> int:
    """Trace of zeta_n^j from Q(zeta_n) down to Q.

    Equals mu(m) * phi(n) / phi(m) where m = n / gcd(n, j mod n).
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    m = n // gcd(n, j % n)
    return moebius(m) * euler_phi(n) // euler_phi(m)


# -- interchange text format ---------------------------------------------
#
# Values are written as sums of `E(n)^k` atoms with integer coefficients,
# e.g. "3*E(5)^2-E(5)"; plain integers carry no E atom.


def render_cyc(x: CycInt) -> str:
    x = x.minimize()
    if x.is_rational():
        return str(x.rational_value())
    parts: list[str] = []
    for e in sorted(x.c):
        c = x.c[e]
        atom = f"E({x.n})" if e == 1 else f"E({x.n})^{e}"
        if e == 0:
            term = str(abs(c))
        elif abs(c) == 1:
            term = atom
        else:
            term = f"{abs(c)}*{atom}"
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+" if c > 0 else "-") + term)
    return "".join(parts)


def parse_cyc(text: str) -> CycInt:
    s = text.replace(" ", "")
    if not s:
        raise CycParseError("empty cyclotomic value")
    pos = 0
    total = CycInt.zero()
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        pos = 1
    while pos < len(s):
        term, pos = _parse_term(s, pos)
        total = total + term.scale(sign)
        if pos < len(s):
            if s[pos] == "+":
                sign = 1
            elif s[pos] == "-":
                sign = -1
            else:
                raise CycParseError(f"expected '+' or '-' at position {pos} in {text!r}")
            pos += 1
            if pos >= len(s):
                raise CycParseError(f"dangling operator in {text!r}")
    return total


def _parse_term(s: str, pos: int) -> tuple[CycInt, int]:
    coef = 1
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if pos > start:
        coef = int(s[start:pos])
        if pos < len(s) and s[pos] == "*":
            pos += 1
        elif pos < len(s) and s[pos] == "E":
            raise CycParseError(f"missing '*' before E at position {pos}")
        else:
            return CycInt.from_int(coef), pos
    if pos >= len(s) or s[pos] != "E":
        raise CycParseError(f"expected term at position {pos} in {s!r}")
    pos += 1
    if pos >= len(s) or s[pos] != "(":
        raise CycParseError(f"expected '(' at position {pos}")
    pos += 1
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if pos == start or pos >= len(s) or s[pos] != ")":
        raise CycParseError(f"malformed E(n) atom at position {start}")
    n = int(s[start:pos])
    if n < 1:
        raise CycParseError("conductor in E(n) must be positive")
    pos += 1
    exp = 1
    if pos < len(s) and s[pos] == "^":
        pos += 1
        start = pos
        if pos < len(s) and s[pos] == "-":
            pos += 1
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise CycParseError(f"missing exponent at position {start}")
        exp = int(s[start:pos])
    return CycInt(n, {exp % n: coef}), pos
