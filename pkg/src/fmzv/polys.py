"""Exact polynomial and rational-function arithmetic.

Two flavors live here:

* ``Poly`` / ``RatFunc`` / ``BiSeries``: one- and two-variable carriers
  with ``fractions.Fraction`` coefficients.  No rounding anywhere; all
  rational functions are kept reduced with a monic denominator.
* list-based polynomials over Z/pZ (``fp_*`` helpers and ``FpRatFunc``)
  for congruence checks sampled in prime fields.

Polynomial gcd over Q clears denominators and runs a subresultant
pseudo-remainder sequence on primitive integer polynomials, which keeps
intermediate coefficients tame without ever leaving exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

_ZERO = Fraction(0)
_NEG_INF = float("-inf")


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction coefficient, got {type(x).__name__}")


class Poly:
    """A polynomial in one indeterminate with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self):
        """Degree, with -inf as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1 if self.coeffs else _NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _as_fraction(other)
            return Poly(c * x for x in self.coeffs)
        if self.is_zero or other.is_zero:
            return Poly()
        a, b = self.coeffs, other.coeffs
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Poly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [_ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlead = other.leading
        dlen = len(other.coeffs)
        for i in range(len(rem) - dlen, -1, -1):
            c = rem[i + dlen - 1] / dlead
            if c != 0:
                q[i] = c
                for j, bj in enumerate(other.coeffs):
                    rem[i + j] -= c * bj
        return Poly(q), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        out = _ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def subs_neg(self) -> "Poly":
        """Substitute z -> -z."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.leading
        return Poly(c / lead for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("z" if c == 1 else f"{c}*z")
            else:
                terms.append(f"z^{i}" if c == 1 else f"{c}*z^{i}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


Z = Poly((0, 1))


def _int_content(cs: list[int]) -> int:
    g = 0
    for c in cs:
        g = int_gcd(g, abs(c))
        if g == 1:
            break
    return g or 1


def _to_primitive_int(poly: Poly) -> list[int]:
    """Clear denominators and divide out the content; leading coeff > 0."""
    if poly.is_zero:
        return []
    lcm = 1
    for c in poly.coeffs:
        lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in poly.coeffs]
    content = _int_content(ints)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over Z.

    The full power of lc(b) is applied even when cancellation skips
    degrees; subresultant divisions rely on it.
    """
    rem = list(a)
    db = len(b) - 1
    lead_b = b[-1]
    e = len(a) - 1 - db + 1
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        lead_r = rem[-1]
        rem = [c * lead_b for c in rem]
        for j in range(db + 1):
            rem[shift + j] -= lead_r * b[j]
        while rem and rem[-1] == 0:
            rem.pop()
        e -= 1
    if e > 0:
        scale = lead_b**e
        rem = [c * scale for c in rem]
    return rem


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q via a subresultant PRS on primitive integer parts."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    A = _to_primitive_int(a)
    B = _to_primitive_int(b)
    if len(A) < len(B):
        A, B = B, A
    g = h = 1
    while True:
        d = len(A) - len(B)
        R = _int_prem(A, B)
        if not R:
            break
        if len(R) == 1:
            return Poly((1,))  # nonzero constant remainder: coprime
        divisor = g * h**d
        A, B = B, [c // divisor for c in R]
        g = abs(A[-1])
        h = g if d == 1 else (g**d // h ** (d - 1) if d > 1 else h)
    content = _int_content(B)
    prim = [c // content for c in B]
    return Poly(prim).monic()


def _series_div(num, den, order: int) -> list[Fraction]:
    """Power-series quotient to the given order; den[0] must be nonzero."""
    n0 = den[0] if den else _ZERO
    if n0 == 0:
        raise ZeroDivisionError("series division needs a unit constant term")
    inv0 = 1 / n0
    out = []
    for i in range(order + 1):
        acc = num[i] if i < len(num) else _ZERO
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc * inv0)
    return out


class RatFunc:
    """A reduced rational function num/den with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly.constant(num)
        if den is None:
            den = Poly((1,))
        elif not isinstance(den, Poly):
            den = Poly.constant(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            object.__setattr__(self, "num", Poly())
            object.__setattr__(self, "den", Poly((1,)))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead = den.leading
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def constant(cls, c) -> "RatFunc":
        return cls(Poly.constant(c))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.constant(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, Poly):
                other = RatFunc(other)
            else:
                return RatFunc(self.num * other, self.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, Poly):
                other = RatFunc(other)
            else:
                return RatFunc(self.num * Fraction(1) / _as_fraction(other), self.den)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __call__(self, x) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def subs_neg(self) -> "RatFunc":
        return RatFunc(self.num.subs_neg(), self.den.subs_neg())

    def regular_at_zero(self) -> bool:
        return self.den.coeff(0) != 0

    def taylor(self, order: int) -> list[Fraction]:
        """Series coefficients at z = 0 up to the given order."""
        if not self.regular_at_zero():
            raise ZeroDivisionError("pole at z = 0")
        return _series_div(list(self.num.coeffs), list(self.den.coeffs), order)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __str__(self):
        if self.den == Poly((1,)):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


class BiSeries:
    """A double power series in x and z truncated at orders (dx, dz).

    The coefficient grid is fully materialized; arithmetic truncates to
    the common orders.
    """

    __slots__ = ("dx", "dz", "grid")

    def __init__(self, grid, dx: int, dz: int):
        if dx < 0 or dz < 0:
            raise ValueError("truncation orders must be >= 0")
        rows = []
        for i in range(dx + 1):
            row = grid[i] if i < len(grid) else ()
            rows.append(tuple(_as_fraction(row[j]) if j < len(row) else _ZERO
                              for j in range(dz + 1)))
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "dz", dz)
        object.__setattr__(self, "grid", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    @classmethod
    def constant(cls, c, dx: int, dz: int) -> "BiSeries":
        return cls([[c]], dx, dz)

    def coeff(self, i: int, j: int) -> Fraction:
        if not (0 <= i <= self.dx and 0 <= j <= self.dz):
            raise ValueError(
                f"coefficient ({i},{j}) beyond truncation orders ({self.dx},{self.dz})"
            )
        return self.grid[i][j]

    def __add__(self, other: "BiSeries"):
        dx, dz = min(self.dx, other.dx), min(self.dz, other.dz)
        return BiSeries(
            [[self.grid[i][j] + other.grid[i][j] for j in range(dz + 1)]
             for i in range(dx + 1)], dx, dz)

    def __neg__(self):
        return BiSeries([[-c for c in row] for row in self.grid], self.dx, self.dz)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            c = _as_fraction(other)
            return BiSeries([[c * v for v in row] for row in self.grid],
                            self.dx, self.dz)
        dx, dz = min(self.dx, other.dx), min(self.dz, other.dz)
        out = [[_ZERO] * (dz + 1) for _ in range(dx + 1)]
        for i1 in range(dx + 1):
            for j1 in range(dz + 1):
                a = self.grid[i1][j1]
                if a == 0:
                    continue
                for i2 in range(dx + 1 - i1):
                    for j2 in range(dz + 1 - j1):
                        b = other.grid[i2][j2]
                        if b != 0:
                            out[i1 + i2][j1 + j2] += a * b
        return BiSeries(out, dx, dz)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (self.dx, self.dz, self.grid) == (other.dx, other.dz, other.grid)

    def __hash__(self):
        return hash(("BiSeries", self.dx, self.dz, self.grid))

    def __repr__(self):
        return f"BiSeries(dx={self.dx}, dz={self.dz})"


# ---------------------------------------------------------------------------
# polynomials over Z/pZ: plain int lists, ascending degree, trailing zeros
# trimmed


def fp_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def fp_add(a, b, p):
    n = max(len(a), len(b))
    return fp_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                    for i in range(n)])


def fp_sub(a, b, p):
    n = max(len(a), len(b))
    return fp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                    for i in range(n)])


def fp_scale(a, c, p):
    c %= p
    return fp_trim([c * x % p for x in a])


def fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return fp_trim(out)


def fp_eval(a, x, p):
    out = 0
    for c in reversed(a):
        out = (out * x + c) % p
    return out


def fp_monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(rem) - db, 0)
    for i in range(len(rem) - db - 1, -1, -1):
        c = rem[i + db] * inv_lead % p
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                rem[i + j] = (rem[i + j] - c * bj) % p
    return fp_trim(q), fp_trim(rem)


def fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, fp_divmod(a, b, p)[1]
    return fp_monic(a, p)


def fp_pochhammer_poly(shift, scale, n, p):
    """(scale*z + shift)(scale*z + shift + 1)...(n factors) over Z/pZ."""
    out = [1]
    for i in range(n):
        out = fp_mul(out, [(shift + i) % p, scale % p], p)
    return out


class FpRatFunc:
    """A reduced rational function over Z/pZ with monic denominator."""

    __slots__ = ("p", "num", "den")

    def __init__(self, num, den, p):
        num = fp_trim([c % p for c in num])
        den = fp_trim([c % p for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            g = fp_gcd(num, den, p)
            if len(g) > 1:
                num = fp_divmod(num, g, p)[0]
                den = fp_divmod(den, g, p)[0]
            inv_lead = pow(den[-1], p - 2, p)
            num = [c * inv_lead % p for c in num]
            den = [c * inv_lead % p for c in den]
        else:
            den = [1]
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "den", tuple(den))

    def __setattr__(self, name, value):
        raise AttributeError("FpRatFunc is immutable")

    def __mul__(self, other: "FpRatFunc"):
        return FpRatFunc(fp_mul(list(self.num), list(other.num), self.p),
                         fp_mul(list(self.den), list(other.den), self.p), self.p)

    def __sub__(self, other: "FpRatFunc"):
        p = self.p
        num = fp_sub(fp_mul(list(self.num), list(other.den), p),
                     fp_mul(list(other.num), list(self.den), p), p)
        return FpRatFunc(num, fp_mul(list(self.den), list(other.den), p), p)

    def scale(self, c: int) -> "FpRatFunc":
        return FpRatFunc(fp_scale(list(self.num), c, self.p), list(self.den), self.p)

    def eval_at(self, x: int):
        """Value at x, or None when the (reduced) denominator vanishes."""
        d = fp_eval(list(self.den), x, self.p)
        if d == 0:
            return None
        return fp_eval(list(self.num), x, self.p) * pow(d, self.p - 2, self.p) % self.p

    def __eq__(self, other):
        if not isinstance(other, FpRatFunc):
            return NotImplemented
        return (self.p, self.num, self.den) == (other.p, other.num, other.den)

    def __hash__(self):
        return hash(("FpRatFunc", self.p, self.num, self.den))

    def __repr__(self):
        return f"FpRatFunc(num={list(self.num)}, den={list(self.den)}, p={self.p})"
