"""Truncated multiple harmonic sums mod p and their family aggregates.

``mhs_strict(ix, ctx)`` is the strict sum over p > m1 > ... > mr > 0 of
1/(m1^k1 ... mr^kr) mod p; ``mhs_star`` is the non-strict (>=) variant.
Both use a suffix recursion over m = 1..p-1 with precomputed inverse
power tables, giving O(p * depth) per index.

Family sums aggregate these values over the index families of fixed
weight and height; ``family_sums_dp`` computes the whole (k, s) table in
a single pass over m as a cross-check and as the fast path for large
k * p products.
"""

from __future__ import annotations

from dataclasses import dataclass

from .indices import (
    Index,
    iter_admissible_indices,
    iter_all_indices,
)
from .modfield import PrimeCtx, Residue, batch_inv_ints, prime_ctx


def _inverse_power_rows(ctx: PrimeCtx, k_max: int) -> list[list[int]]:
    """rows[j][l] = l^(-j) mod p for 1 <= l < p, 0 <= j <= k_max.

    Rows are grown on demand and cached on the context; the l = 0 slot
    is a dummy zero.
    """
    rows = ctx.memo("inverse_power_rows", list)
    if len(rows) <= k_max:
        with ctx._lock:
            p = ctx.p
            if not rows:
                rows.append([1] * p)  # j = 0; dummy value at l = 0 is fine here
                inv = [0] + batch_inv_ints(list(range(1, p)), p)
                rows.append(inv)
            inv = rows[1]
            while len(rows) <= k_max:
                prev = rows[-1]
                rows.append([prev[l] * inv[l] % p for l in range(p)])
    return rows


def _mhs_int(parts: tuple[int, ...], ctx: PrimeCtx, star: bool) -> int:
    if not parts:
        return 1
    p = ctx.p
    r = len(parts)
    if not star and r >= p:
        return 0  # no strictly decreasing chain of that length below p
    rows = _inverse_power_rows(ctx, max(parts))
    pr = [rows[k] for k in parts]
    # state[j] accumulates the suffix sum starting at part j; state[r] = 1.
    state = [0] * r + [1]
    if star:
        for m in range(1, p):
            for j in range(r - 1, -1, -1):
                state[j] = (state[j] + pr[j][m] * state[j + 1]) % p
    else:
        for m in range(1, p):
            for j in range(r):
                state[j] = (state[j] + pr[j][m] * state[j + 1]) % p
    return state[0]


def mhs_strict(ix: Index, ctx: PrimeCtx) -> Residue:
    """Strict truncated sum for ``ix`` mod p; empty index gives 1."""
    return Residue(_mhs_int(tuple(ix), ctx, star=False), ctx)


def mhs_star(ix: Index, ctx: PrimeCtx) -> Residue:
    """Non-strict truncated sum for ``ix`` mod p; empty index gives 1."""
    return Residue(_mhs_int(tuple(ix), ctx, star=True), ctx)


def _require_prime_above(k: int, ctx: PrimeCtx) -> None:
    if ctx.p <= k + 1:
        raise ValueError(f"prime {ctx.p} too small: need p > {k + 1} for weight {k}")


def _family_table_for_weight(k: int, ctx: PrimeCtx) -> dict[int, tuple[int, int]]:
    """s -> (alternating strict sum, star sum) over the admissible family."""

    def build():
        table: dict[int, list[int]] = {}
        p = ctx.p
        for s in range(1, k // 2 + 1):
            acc = [0, 0]
            for ix in iter_admissible_indices(k, s):
                parts = tuple(ix)
                sign = -1 if len(parts) % 2 else 1
                acc[0] = (acc[0] + sign * _mhs_int(parts, ctx, star=False)) % p
                acc[1] = (acc[1] + _mhs_int(parts, ctx, star=True)) % p
            table[s] = acc
        return {s: (v[0], v[1]) for s, v in table.items()}

    return ctx.memo(("family_table", k), build)


def family_sum_star(k: int, s: int, ctx: PrimeCtx) -> Residue:
    """Sum of mhs_star over the admissible family of weight k, height s."""
    if k < 1 or s < 1:
        raise ValueError(f"need k >= 1 and s >= 1, got k={k}, s={s}")
    _require_prime_above(k, ctx)
    if s > k // 2:
        return ctx.zero
    return Residue(_family_table_for_weight(k, ctx)[s][1], ctx)


def family_sum_alt_strict(k: int, s: int, ctx: PrimeCtx) -> Residue:
    """Sum of (-1)^depth * mhs_strict over the admissible family."""
    if k < 1 or s < 1:
        raise ValueError(f"need k >= 1 and s >= 1, got k={k}, s={s}")
    _require_prime_above(k, ctx)
    if s > k // 2:
        return ctx.zero
    return Residue(_family_table_for_weight(k, ctx)[s][0], ctx)


def family_sum_star_unrestricted(k: int, s: int, ctx: PrimeCtx) -> Residue:
    """Sum of mhs_star over ALL indices of weight k, height s (free first part)."""
    if k < 0 or s < 0:
        raise ValueError(f"need k >= 0 and s >= 0, got k={k}, s={s}")
    _require_prime_above(k, ctx)

    def build():
        p = ctx.p
        total = 0
        for ix in iter_all_indices(k, s):
            total = (total + _mhs_int(tuple(ix), ctx, star=True)) % p
        return total

    return Residue(ctx.memo(("family_star_all", k, s), build), ctx)


def family_sums_dp(k_max: int, ctx: PrimeCtx) -> dict[tuple[int, int], tuple[Residue, Residue]]:
    """All (S_alt_strict, S_star) family sums for 2 <= k <= k_max in one pass.

    Dynamic programming over the truncation point m = p-1 .. 1.  The
    state (w, h) holds the contribution of all partial indices of
    accumulated weight w and height h already placed at positions > m
    (star chains may keep placing parts at the same m).  The first part
    placed is required to be >= 2.  Must agree with the enumeration path
    exactly.
    """
    if k_max < 2:
        raise ValueError(f"need k_max >= 2, got {k_max}")
    _require_prime_above(k_max, ctx)
    p = ctx.p
    h_max = k_max // 2
    rows = _inverse_power_rows(ctx, k_max)

    # D: strict with (-1)^depth folded in; E: star.  [w][h] layout.
    D = [[0] * (h_max + 1) for _ in range(k_max + 1)]
    E = [[0] * (h_max + 1) for _ in range(k_max + 1)]
    D[0][0] = E[0][0] = 1

    for m in range(p - 1, 0, -1):
        ipw = [rows[e][m] for e in range(k_max + 1)]
        # Strict: place at most one part at m; read pre-m values only,
        # so sweep w downward (sources w-e < w are still old).
        for w in range(k_max, 0, -1):
            for h in range(min(w // 2, h_max), -1, -1):
                acc = D[w][h]
                for e in range(1, w + 1):
                    hs = h - 1 if e >= 2 else h
                    if hs < 0:
                        continue
                    if w == e:  # source is the empty state: first part needs e >= 2
                        if e < 2 or hs != 0:
                            continue
                        v = 1
                    else:
                        v = D[w - e][hs]
                        if not v:
                            continue
                    acc -= ipw[e] * v
                D[w][h] = acc % p
        # Star: any number of parts may sit at the same m, so transitions
        # read the in-progress values; sweep w upward.
        for w in range(1, k_max + 1):
            for h in range(min(w // 2, h_max) + 1):
                acc = E[w][h]
                for e in range(1, w + 1):
                    hs = h - 1 if e >= 2 else h
                    if hs < 0:
                        continue
                    if w == e:
                        if e < 2 or hs != 0:
                            continue
                        v = 1
                    else:
                        v = E[w - e][hs]
                        if not v:
                            continue
                    acc += ipw[e] * v
                E[w][h] = acc % p

    out: dict[tuple[int, int], tuple[Residue, Residue]] = {}
    for k in range(2, k_max + 1):
        for s in range(1, k // 2 + 1):
            out[(k, s)] = (Residue(D[k][s], ctx), Residue(E[k][s], ctx))
    return out


@dataclass(frozen=True)
class AWindow:
    """A finite window of a prime-indexed family of residues.

    ``entries`` maps primes (strictly increasing) to residue values.
    Two windows compare equal when they agree on every prime they share;
    windows with disjoint prime sets compare equal vacuously.  ``meta``
    records what the values represent (an index, a family, ...).
    """

    entries: tuple[tuple[int, int], ...]
    meta: str = ""

    def __post_init__(self):
        last = 0
        for p, v in self.entries:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if not 0 <= v < p:
                raise ValueError(f"value {v} out of range for p={p}")
            last = p

    @classmethod
    def compute(cls, ix: Index, primes, star: bool = False) -> "AWindow":
        entries = []
        for p in sorted(set(primes)):
            ctx = prime_ctx(p)
            entries.append((p, _mhs_int(tuple(ix), ctx, star=star)))
        kind = "star" if star else "strict"
        return cls(tuple(entries), meta=f"mhs_{kind}({ix})")

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def value(self, p: int) -> int:
        for q, v in self.entries:
            if q == p:
                return v
        raise KeyError(f"prime {p} not in window")

    def residue(self, p: int) -> Residue:
        return Residue(self.value(p), prime_ctx(p))

    def __eq__(self, other):
        if not isinstance(other, AWindow):
            return NotImplemented
        mine = dict(self.entries)
        for p, v in other.entries:
            if p in mine and mine[p] != v:
                return False
        return True

    def __repr__(self):
        inner = ", ".join(f"{p}:{v}" for p, v in self.entries)
        return f"AWindow({self.meta or 'values'}; {inner})"
