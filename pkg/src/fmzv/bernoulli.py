"""Bernoulli numbers mod p and the finite zeta residues B_(p-k)/k.

Two independent routes are kept deliberately separate:

* the classical recurrence sum(C(m+1, j) * B_j, j <= m) = 0, built as a
  per-prime table (the oracle; O(p^2) work, vectorized when possible);
* the alternating inverse power sum, which a classical congruence ties
  to 2*(1 - 2^(1-k)) * B_(p-k)/k whenever 2^(k-1) is not 1 mod p.

``check_euler_congruence`` confronts the two routes; ``zeta_sweep``
runs the confrontation over a prime range while hunting for zero
residues of B_(p-k)/k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import VonStaudtPoleError
from .modfield import PrimeCtx, Residue, prime_ctx
from .records import VerificationRecord, comparison_record

# numpy path needs products of two residues to fit in int64
_NUMPY_PRIME_LIMIT = 1 << 31


class BernoulliTable:
    """Residues of B_n mod p for n in {0, 1} and even n up to p-3.

    Odd n >= 3 are identically zero and are not stored; n with
    (p-1) | n (n > 0) are von Staudt poles and have no entry.
    """

    def __init__(self, ctx: PrimeCtx):
        self.ctx = ctx
        p = ctx.p
        self.b1 = (p - 1) // 2  # representative of -1/2
        self.even = _build_even_table(ctx)

    def value(self, n: int) -> int:
        p = self.ctx.p
        if n < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {n}")
        if n == 0:
            return 1
        if (p - 1) > 0 and n % (p - 1) == 0:
            raise VonStaudtPoleError(f"(p-1) | {n}: B_{n} is not p-integral mod {p}")
        if n == 1:
            return self.b1
        if n % 2 == 1:
            # B_n = 0 exactly for odd n >= 3, so any representable odd
            # index below the pole is fine.
            if n > p - 2:
                raise ValueError(f"Bernoulli index {n} out of range for p={p}")
            return 0
        if n > p - 3:
            raise ValueError(f"Bernoulli index {n} out of range for p={p}")
        return self.even[n // 2]


def _build_even_table(ctx: PrimeCtx) -> list[int]:
    def build():
        p = ctx.p
        fact, inv_fact = ctx.factorials()
        if p < _NUMPY_PRIME_LIMIT:
            return _even_table_numpy(p, fact, inv_fact)
        return _even_table_python(p, fact, inv_fact)

    return ctx.memo("bernoulli_even", build)


def _even_table_python(p: int, fact, inv_fact) -> list[int]:
    # ev[i] = B_{2i}; only even j (and j = 1) contribute to the recurrence.
    n_even = (p - 3) // 2 + 1 if p >= 5 else 1
    ev = [0] * max(n_even, 1)
    ev[0] = 1
    b1 = (p - 1) // 2
    for m in range(2, p - 2, 2):
        fm1 = fact[m + 1]
        total = (m + 1) * b1 % p
        for j in range(0, m, 2):
            total += fm1 * inv_fact[j] % p * inv_fact[m + 1 - j] % p * ev[j // 2] % p
        inv_m1 = inv_fact[m + 1] * fact[m] % p
        ev[m // 2] = -total * inv_m1 % p
    return ev


def _even_table_numpy(p: int, fact, inv_fact) -> list[int]:
    n_even = (p - 3) // 2 + 1 if p >= 5 else 1
    ev = np.zeros(max(n_even, 1), dtype=np.int64)
    ev[0] = 1
    b1 = (p - 1) // 2
    F = np.asarray(fact, dtype=np.int64)
    IF = np.asarray(inv_fact, dtype=np.int64)
    evens = np.arange(0, p - 1, 2, dtype=np.int64)
    if_even = IF[evens]
    for m in range(2, p - 2, 2):
        idx = m // 2  # even j run over 0, 2, ..., m-2
        binoms = F[m + 1] * if_even[:idx] % p * IF[m + 1 - evens[:idx]] % p
        total = int((binoms * ev[:idx] % p).sum() % p)
        total = (total + (m + 1) * b1) % p
        inv_m1 = inv_fact[m + 1] * fact[m] % p
        ev[idx] = -total * inv_m1 % p
    return [int(v) for v in ev]


def bernoulli_table(ctx: PrimeCtx) -> BernoulliTable:
    return ctx.memo("bernoulli_table", lambda: BernoulliTable(ctx))


def bernoulli_mod_recurrence(n: int, ctx: PrimeCtx) -> Residue:
    """B_n mod p from the recurrence table; n must avoid the von Staudt pole."""
    return Residue(bernoulli_table(ctx).value(n), ctx)


def alternating_power_sum(k: int, ctx: PrimeCtx) -> Residue:
    """Sum of (-1)^(l-1) * l^(-k) over l = 1..p-1, mod p."""
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    p = ctx.p
    e = (-k) % (p - 1)
    total = 0
    for l in range(1, p):
        t = pow(l, e, p)
        total += t if l % 2 == 1 else -t
    return Residue(total % p, ctx)


def zeta_residue(k: int, ctx: PrimeCtx) -> Residue:
    """The p-component B_(p-k) / k of the finite zeta analogue; zero for even k."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if ctx.p <= k + 1:
        raise ValueError(f"prime {ctx.p} too small: need p > {k + 1}")
    p = ctx.p
    b = bernoulli_table(ctx).value(p - k)
    return Residue(b * pow(k, p - 2, p) % p, ctx)


def _alternating_factor(k: int, p: int) -> int:
    """2 * (1 - 2^(1-k)) mod p; zero iff 2^(k-1) = 1 mod p."""
    two_pow = pow(2, k - 1, p)
    return 2 * (1 - pow(two_pow, p - 2, p)) % p


def check_euler_congruence(k: int, ctx: PrimeCtx) -> VerificationRecord:
    """Alternating power sum vs 2*(1 - 2^(1-k)) * B_(p-k)/k, as a record."""
    p = ctx.p
    if not 2 <= k <= p - 3:
        raise ValueError(f"need 2 <= k <= p-3, got k={k}, p={p}")
    lhs = alternating_power_sum(k, ctx).value
    rhs = _alternating_factor(k, p) * zeta_residue(k, ctx).value % p
    return comparison_record("euler", str(lhs), str(rhs), p=p, k=k)


@dataclass(frozen=True)
class ZetaSweepRow:
    """One prime's worth of the zeta-residue hunt."""

    p: int
    k: int
    residue: int | None = None
    zero: bool | None = None
    cross: str = "skipped"  # "ok" | "fail" | "degenerate" | "skipped"
    cross_value: int | None = None
    skipped: bool = False
    reason: str | None = None


def zeta_sweep_row(k: int, p: int) -> ZetaSweepRow:
    if p <= k + 1:
        return ZetaSweepRow(p=p, k=k, skipped=True, reason=f"p <= {k + 1}")
    ctx = prime_ctx(p)
    res = zeta_residue(k, ctx).value
    factor = _alternating_factor(k, p)
    if factor == 0:
        return ZetaSweepRow(
            p=p, k=k, residue=res, zero=(res == 0), cross="degenerate",
            reason="2^(k-1) = 1 mod p: alternating route cannot divide",
        )
    derived = alternating_power_sum(k, ctx).value * pow(factor, p - 2, p) % p
    cross = "ok" if derived == res else "fail"
    return ZetaSweepRow(p=p, k=k, residue=res, zero=(res == 0),
                        cross=cross, cross_value=derived)


def zeta_sweep(k: int, primes) -> list[ZetaSweepRow]:
    """Per-prime residues of B_(p-k)/k with the two-method cross-check.

    Primes p <= k+1 are reported as skipped, never failed.  Rows come
    back ordered by prime.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    return [zeta_sweep_row(k, p) for p in sorted(set(primes))]
