"""Exact-rational verification of the generating-function machinery.

The two-variable generating function under test aggregates non-strict
polylogarithm truncations over index families, graded by weight (x) and
height (z); its t^n coefficient is a finite sum of partial fractions

    sum over l of [ W(n,l)(z)/(x+z-l) + W(n,l)(-z)/(x-z-l) ]

whose weights W(n,l) are ratios of rising factorials.  This module
builds those weights exactly (``pole_weight``), expands the t^n
coefficient as a double power series (``gf_coeff_series``), and checks
the expansion coefficient-by-coefficient against brute polylog sums
(``gf_coefficient_check``).  It also certifies the terminating
evaluation of the Gauss series at 1 and, working over Z/pZ, the
truncation congruences that connect the finite sums to that evaluation.

All arithmetic is exact; re-running any check yields bit-identical
rationals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import (
    AllSamplesSkippedError,
    DegenerateParametersError,
    PoleCancellationError,
)
from .indices import Index, iter_admissible_indices
from .modfield import PrimeCtx, prime_ctx
from .polys import (
    BiSeries,
    FpRatFunc,
    Poly,
    RatFunc,
    fp_add,
    fp_mul,
    fp_pochhammer_poly,
    fp_scale,
)
from .records import VerificationRecord, comparison_record, skipped_record


def frac_str(q: Fraction) -> str:
    """Canonical num/den rendering used by all symbolic reports."""
    return f"{q.numerator}/{q.denominator}"


class Lcg:
    """64-bit linear congruential generator; reproducible across platforms."""

    MASK = (1 << 64) - 1
    MULT = 6364136223846793005
    INC = 1442695040888963407

    def __init__(self, seed: int):
        self.state = (seed ^ 0x9E3779B97F4A7C15) & self.MASK
        self._step()

    def _step(self) -> int:
        self.state = (self.state * self.MULT + self.INC) & self.MASK
        return self.state >> 33

    def below(self, n: int) -> int:
        return self._step() % n


def pochhammer_poly(shift: int, scale: int, n: int) -> Poly:
    """(scale*z + shift)(scale*z + shift + 1)...(n factors) as a Poly."""
    if n < 0:
        raise ValueError("pochhammer length must be >= 0")
    out = Poly((1,))
    for i in range(n):
        out = out * Poly((shift + i, scale))
    return out


def _poch_frac(a: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def pole_weight(n: int, l: int) -> RatFunc:
    """The partial-fraction weight at the pole x = l - z, canonical form.

    Built from rising factorials with the offset m = n - l:

        (-1)^l / (2z) * (z-l+1)_(l-1) / (2z-l+1)_(l-1)
                      * (l)_m (z)_m / ((2z+1)_m m!)
    """
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got l={l}, n={n}")
    m = n - l
    num = pochhammer_poly(1 - l, 1, l - 1) * pochhammer_poly(0, 1, m)
    den = (pochhammer_poly(1 - l, 2, l - 1)
           * Poly((0, 2))
           * pochhammer_poly(1, 2, m))
    const = Fraction((-1) ** l) * _poch_frac(Fraction(l), m) / factorial(m)
    return RatFunc(num * const, den)


def pole_weight_product_form(n: int, l: int) -> RatFunc:
    """The same weight as a single binomial-times-products display.

    Boundary cases l = 1 and l = n read the trailing runs as empty
    products; ``anl_form_agreement`` certifies that reading.
    """
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got l={l}, n={n}")
    c = Fraction((-1) ** l * comb(n - 1, l - 1))
    num = pochhammer_poly(1 - l, 1, l - 1) * pochhammer_poly(0, 1, n - l)
    den = (pochhammer_poly(1 - l, 2, l - 1)
           * Poly((0, 2))
           * pochhammer_poly(1, 2, n - l))
    return RatFunc(num * c, den)


def anl_form_agreement(n_max: int) -> list[VerificationRecord]:
    """Compare the two weight displays as reduced rational functions."""
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    records = []
    for n in range(1, n_max + 1):
        for l in range(1, n + 1):
            a = pole_weight(n, l)
            b = pole_weight_product_form(n, l)
            records.append(comparison_record(
                "anl", str(a), str(b), extra=(("n", n), ("l", l))))
    return records


@lru_cache(maxsize=64)
def gf_coeff_series(n: int, dx: int = 12, dz: int = 12) -> BiSeries:
    """Double power series of the t^n generating-function coefficient.

    Each pole term is expanded geometrically in x; the two z -> -z
    partner terms at l = n are combined symbolically first so the simple
    pole at z = 0 cancels exactly before any series expansion.  A
    surviving pole raises PoleCancellationError (a bug, not bad input).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    grid = [[Fraction(0)] * (dz + 1) for _ in range(dx + 1)]
    for l in range(1, n + 1):
        w_pos = pole_weight(n, l)
        w_neg = w_pos.subs_neg()
        lin_pos = RatFunc(Poly((-l, 1)))   # z - l
        lin_neg = RatFunc(Poly((-l, -1)))  # -z - l
        cur_pos, cur_neg = w_pos, w_neg
        for j in range(dx + 1):
            cur_pos = cur_pos / lin_pos
            cur_neg = cur_neg / lin_neg
            sign = -1 if j % 2 else 1
            if l == n:
                pair = cur_pos + cur_neg
                if not pair.regular_at_zero():
                    raise PoleCancellationError(
                        f"pole at z=0 survived the l={l} pair of the n={n} term")
                rows = [pair.taylor(dz)]
            else:
                for part in (cur_pos, cur_neg):
                    if not part.regular_at_zero():
                        raise PoleCancellationError(
                            f"unexpected z=0 pole in the (n={n}, l={l}) term")
                rows = [cur_pos.taylor(dz), cur_neg.taylor(dz)]
            dest = grid[j]
            for coeffs in rows:
                for i, c in enumerate(coeffs):
                    dest[i] += sign * c
    return BiSeries(grid, dx, dz)


def polylog_star_coeff(ix: Index, n: int) -> Fraction:
    """Coefficient of t^n in the non-strict polylogarithm of ``ix``."""
    parts = tuple(ix)
    if not parts:
        raise ValueError("index must have depth >= 1")
    if n < 1:
        raise ValueError("need n >= 1")
    # suffix[u]: sum over non-strict chains bounded by u of the tail product
    suffix = [Fraction(1)] * (n + 1)
    for j in range(len(parts) - 1, 0, -1):
        k = parts[j]
        acc = Fraction(0)
        new = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            acc += Fraction(1, m**k) * suffix[m]
            new[m] = acc
        suffix = new
    return Fraction(1, n ** parts[0]) * suffix[n]


def gf_coefficient_check(n: int, k: int, s: int) -> VerificationRecord:
    """[x^(k-2s) z^(2s-2)] of the series vs the brute polylog family sum."""
    if n < 1 or s < 1 or 2 * s > k:
        raise ValueError(f"need n >= 1, s >= 1, 2s <= k; got n={n}, k={k}, s={s}")
    i, j = k - 2 * s, 2 * s - 2
    series = gf_coeff_series(n, max(12, i), max(12, j))
    lhs = series.coeff(i, j)
    rhs = sum((polylog_star_coeff(ix, n) for ix in iter_admissible_indices(k, s)),
              Fraction(0))
    return comparison_record("phi0", frac_str(lhs), frac_str(rhs),
                             k=k, s=s, extra=(("n", n),))


def gauss_terminating_check(m: int, b, c) -> VerificationRecord:
    """Terminating Gauss series at 1 vs its closed rising-factorial form.

    Checks sum_{j<=m} (-m)_j (b)_j / ((c)_j j!) = (c-b)_m / (c)_m with
    exact rationals; a vanishing (c)_j factor raises
    DegenerateParametersError.
    """
    if m < 0:
        raise ValueError("need m >= 0")
    b, c = Fraction(b), Fraction(c)
    for j in range(m):
        if c + j == 0:
            raise DegenerateParametersError(
                f"(c)_{j + 1} vanishes at c={frac_str(c)}")
    lhs = Fraction(0)
    term = Fraction(1)
    for j in range(m + 1):
        lhs += term
        if j < m:
            term *= Fraction((-m + j)) * (b + j) / ((c + j) * (j + 1))
    rhs = _poch_frac(c - b, m) / _poch_frac(c, m)
    return comparison_record(
        "gauss", frac_str(lhs), frac_str(rhs),
        extra=(("m", m), ("b", frac_str(b)), ("c", frac_str(c))))


# ---------------------------------------------------------------------------
# congruence checks over Z/pZ


def _build_congruence_sides(l: int, ctx: PrimeCtx):
    """The three displayed congruences as reduced pairs over Z/pZ.

    Returns [(name, lhs, rhs), ...].  The Fermat-quotient factor
    (z^(p-1)-1)/((2z)^(p-1)-1) is built literally and reduces to 1 in
    Z/pZ(z), which is what lets the closed forms be sampled at all:
    written as raw products of ~p consecutive shifts, both sides vanish
    at every prime-field point.
    """
    p = ctx.p
    M = p - l
    fact, inv_fact = ctx.factorials()

    # prefix (z)_n and suffix products of (2z+1+i) factors
    z_poch = [[1]]
    for i in range(M):
        z_poch.append(fp_mul(z_poch[-1], [i % p, 1], p))
    suf = [None] * (M + 1)
    suf[M] = [1]
    for i in range(M - 1, -1, -1):
        suf[i] = fp_mul(suf[i + 1], [(1 + i) % p, 2], p)
    # suf[i] = prod_{j=i}^{M-1}(2z+1+j); (2z+1)_M = suf[0]
    den_M = suf[0]
    # common denominator for the truncated sum: (2z+1)_(M-1)
    den_M1 = [1]
    for i in range(M - 1):
        den_M1 = fp_mul(den_M1, [(1 + i) % p, 2], p)

    poch_l = [1] * (M + 1)
    for i in range(M):
        poch_l[i + 1] = poch_l[i] * ((l + i) % p) % p
    coeff = [poch_l[n] * inv_fact[n] % p for n in range(M + 1)]
    tail_const = poch_l[M] * inv_fact[M] % p  # (l)_M / M!

    # (i) truncated sum vs terminating series minus its last term
    num_i = []
    for n in range(M):
        # suffix over the shorter denominator: prod_{j=n}^{M-2}(2z+1+j)
        term = fp_mul(z_poch[n], _suffix_short(n, M, p), p)
        num_i = fp_add(num_i, fp_scale(term, coeff[n], p), p)
    lhs_i = FpRatFunc(num_i, den_M1, p)
    rhs_i_num = fp_add(fp_pochhammer_poly(1, 1, M, p),
                       fp_scale(z_poch[M], -tail_const % p, p), p)
    rhs_i = FpRatFunc(rhs_i_num, den_M, p)

    # (ii) full terminating series vs the Fermat-quotient closed form
    num_ii = []
    for n in range(M + 1):
        term = fp_mul(z_poch[n], suf[n], p)
        num_ii = fp_add(num_ii, fp_scale(term, coeff[n], p), p)
    lhs_ii = FpRatFunc(num_ii, den_M, p)
    fermat = FpRatFunc([-1] + [0] * (p - 2) + [1],
                       [-1] + [0] * (p - 2) + [pow(2, p - 1, p)], p)
    rhs_ii = fermat * FpRatFunc(fp_pochhammer_poly(1 - l, 2, l - 1, p),
                                fp_pochhammer_poly(1 - l, 1, l - 1, p), p)

    # (iii) the subtracted tail term vs its closed form
    lhs_iii = FpRatFunc(fp_scale(z_poch[M], tail_const, p), den_M, p)
    sign = 1 if l % 2 == 1 else -1
    rhs_iii = fermat * FpRatFunc(
        fp_mul([0, 1], fp_pochhammer_poly(1 - l, 2, l - 1, p), p),
        fp_pochhammer_poly(-l, 1, l, p), p)
    rhs_iii = rhs_iii.scale(sign)

    return [("truncation", lhs_i, rhs_i),
            ("closed-form", lhs_ii, rhs_ii),
            ("tail-term", lhs_iii, rhs_iii)]


def _suffix_short(n: int, M: int, p: int):
    out = [1]
    for j in range(n, M - 1):
        out = fp_mul(out, [(1 + j) % p, 2], p)
    return out


def hypergeom_congruence_check(l: int, ctx: PrimeCtx, samples: int = 20,
                               seed: int = 1) -> VerificationRecord:
    """Sample the three truncation/closed-form congruences at random z0.

    Each congruence is built symbolically as a reduced rational function
    over Z/pZ, then evaluated pointwise at seeded pseudorandom z0 in
    [1, p-1]; a z0 where either reduced denominator vanishes is skipped
    and reported.  Raises AllSamplesSkippedError when some congruence
    never finds an admissible z0.
    """
    p = ctx.p
    if not 1 <= l <= p - 2:
        raise ValueError(f"need 1 <= l <= p-2, got l={l}, p={p}")
    if samples < 1:
        raise ValueError("need samples >= 1")
    sides = _build_congruence_sides(l, ctx)
    rng = Lcg((seed << 20) ^ (p << 8) ^ l)
    evaluated = [0] * len(sides)
    skipped = [0] * len(sides)
    mismatch = None
    cap = samples * 16
    for _ in range(cap):
        if all(e >= samples for e in evaluated):
            break
        z0 = 1 + rng.below(p - 1)
        for idx, (name, lhs, rhs) in enumerate(sides):
            if evaluated[idx] >= samples:
                continue
            lv = lhs.eval_at(z0)
            rv = rhs.eval_at(z0)
            if lv is None or rv is None:
                skipped[idx] += 1
                continue
            evaluated[idx] += 1
            if lv != rv and mismatch is None:
                mismatch = (name, z0, lv, rv)
    if any(e == 0 for e in evaluated):
        starved = [sides[i][0] for i in range(len(sides)) if evaluated[i] == 0]
        raise AllSamplesSkippedError(
            f"no admissible z0 for {', '.join(starved)} (l={l}, p={p})")
    extra = (
        ("l", l),
        ("seed", seed),
        ("samples", samples),
        ("evaluated", "/".join(str(e) for e in evaluated)),
        ("skipped_samples", "/".join(str(s) for s in skipped)),
    )
    if mismatch is None:
        return VerificationRecord(check="hypcong", p=p, passed=True, extra=extra)
    name, z0, lv, rv = mismatch
    return VerificationRecord(
        check="hypcong", p=p, lhs=str(lv), rhs=str(rv), passed=False,
        reason=f"{name} congruence failed at z0={z0}", extra=extra)


# ---------------------------------------------------------------------------
# suite drivers (used by the CLI and the acceptance tests)


def run_gauss_suite(m_max: int = 8, pairs: int = 25, seed: int = 42) -> list[VerificationRecord]:
    """Seeded random rational (b, c) pairs, checked at every m <= m_max."""
    rng = Lcg(seed)
    records = []
    for _ in range(pairs):
        b = Fraction(rng.below(25) - 12, 1 + rng.below(10))
        c = Fraction(rng.below(25) - 12, 1 + rng.below(10))
        for m in range(m_max + 1):
            try:
                records.append(gauss_terminating_check(m, b, c))
            except DegenerateParametersError as err:
                records.append(skipped_record(
                    "gauss", str(err),
                    extra=(("m", m), ("b", frac_str(b)), ("c", frac_str(c)))))
    return records


def run_anl_suite(n_max: int = 6) -> list[VerificationRecord]:
    return anl_form_agreement(n_max)


def run_phi0_suite(n_max: int = 5, k_max: int = 6) -> list[VerificationRecord]:
    records = []
    for n in range(1, n_max + 1):
        for k in range(2, k_max + 1):
            for s in range(1, k // 2 + 1):
                records.append(gf_coefficient_check(n, k, s))
    return records


def run_hypcong_suite(p: int, samples: int = 20, seed: int = 7,
                      ls=None) -> list[VerificationRecord]:
    ctx = prime_ctx(p)
    if ls is None:
        ls = range(1, p - 1)
    records = []
    for l in ls:
        try:
            records.append(hypergeom_congruence_check(l, ctx, samples, seed))
        except AllSamplesSkippedError as err:
            records.append(VerificationRecord(
                check="hypcong", p=p, passed=False,
                reason=str(err), extra=(("l", l), ("seed", seed))))
    return records
