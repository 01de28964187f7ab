"""Identity-level checks, each yielding a VerificationRecord.

The two headline identities share one right-hand side,

    2 * C(k-1, 2s-1) * (1 - 2^(1-k)) * B_(p-k)/k  (mod p),

facing the star family sum ("ao") and the depth-alternating strict
family sum ("lm") respectively.  Supporting checks cover the sign
relation between the two left-hand sides ("lemma"), the strict/star
convolution identity ("antipode"), the reversal sign law ("reversal"),
and the vanishing of unrestricted star family sums ("heightsum").

Primes at or below the per-check guard (k+1, or weight+1 for the index
checks) produce skipped records, never failures: identities of
prime-indexed families are insensitive to finitely many primes.  A
failing record carries both residues and every parameter needed to
reproduce it, and sweeps keep going past failures.
"""

from __future__ import annotations

from .bernoulli import zeta_residue
from .errors import InfeasibleFamilyError
from .harmonic import (
    family_sum_alt_strict,
    family_sum_star,
    family_sum_star_unrestricted,
    mhs_star,
    mhs_strict,
)
from .indices import Index, iter_all_indices, iter_indices_of_weight
from .modfield import PrimeCtx, binom_mod, prime_ctx
from .records import VerificationRecord, comparison_record, skipped_record

CHECK_NAMES = ("ao", "lm", "lemma", "antipode", "reversal", "heightsum")


def _shared_rhs(k: int, s: int, ctx: PrimeCtx) -> int:
    p = ctx.p
    binom = binom_mod(k - 1, 2 * s - 1, ctx).value
    half_factor = (1 - pow(pow(2, k - 1, p), p - 2, p)) % p
    return 2 * binom % p * half_factor % p * zeta_residue(k, ctx).value % p


def _family_guards(k: int, s: int) -> None:
    if k < 2 or s < 1:
        raise ValueError(f"need k >= 2 and s >= 1, got k={k}, s={s}")
    if 2 * s > k:
        raise InfeasibleFamilyError(f"no indices of weight {k} and height {s}")


def verify_ao(k: int, s: int, ctx: PrimeCtx) -> VerificationRecord:
    """Star family sum vs the shared binomial-Bernoulli right side."""
    _family_guards(k, s)
    if ctx.p <= k + 1:
        return skipped_record("ao", f"p <= {k + 1}", p=ctx.p, k=k, s=s)
    lhs = family_sum_star(k, s, ctx).value
    rhs = _shared_rhs(k, s, ctx)
    return comparison_record("ao", str(lhs), str(rhs), p=ctx.p, k=k, s=s)


def verify_lm(k: int, s: int, ctx: PrimeCtx) -> VerificationRecord:
    """Depth-alternating strict family sum vs the same right side."""
    _family_guards(k, s)
    if ctx.p <= k + 1:
        return skipped_record("lm", f"p <= {k + 1}", p=ctx.p, k=k, s=s)
    lhs = family_sum_alt_strict(k, s, ctx).value
    rhs = _shared_rhs(k, s, ctx)
    return comparison_record("lm", str(lhs), str(rhs), p=ctx.p, k=k, s=s)


def verify_lemma(k: int, s: int, ctx: PrimeCtx) -> VerificationRecord:
    """Sign relation: star family sum = (-1)^(k-1) * alternating strict sum."""
    _family_guards(k, s)
    if ctx.p <= k + 1:
        return skipped_record("lemma", f"p <= {k + 1}", p=ctx.p, k=k, s=s)
    p = ctx.p
    lhs = family_sum_star(k, s, ctx).value
    sign = 1 if (k - 1) % 2 == 0 else -1
    rhs = sign * family_sum_alt_strict(k, s, ctx).value % p
    return comparison_record("lemma", str(lhs), str(rhs), p=ctx.p, k=k, s=s)


def verify_antipode(ix: Index, ctx: PrimeCtx) -> VerificationRecord:
    """Alternating strict/star convolution over prefix splits sums to zero.

    Empty prefix/suffix factors contribute 1, so the i = 0 and i = depth
    boundary terms are the plain star and signed strict values.
    """
    if ix.depth < 1:
        raise ValueError("antipode check needs depth >= 1")
    if ctx.p <= ix.weight + 1:
        return skipped_record("antipode", f"p <= {ix.weight + 1}",
                              p=ctx.p, index=str(ix))
    p = ctx.p
    parts = tuple(ix)
    total = 0
    for i in range(len(parts) + 1):
        head = Index(parts[:i][::-1])
        tail = Index(parts[i:])
        sign = -1 if i % 2 else 1
        total = (total + sign * mhs_strict(head, ctx).value
                 * mhs_star(tail, ctx).value) % p
    return comparison_record("antipode", str(total), "0", p=ctx.p, index=str(ix))


def verify_reversal(ix: Index, ctx: PrimeCtx) -> VerificationRecord:
    """Strict sum of the reversed index vs (-1)^weight times the original."""
    if ctx.p <= ix.weight + 1:
        return skipped_record("reversal", f"p <= {ix.weight + 1}",
                              p=ctx.p, index=str(ix))
    p = ctx.p
    lhs = mhs_strict(ix.reverse(), ctx).value
    sign = 1 if ix.weight % 2 == 0 else -1
    rhs = sign * mhs_strict(ix, ctx).value % p
    return comparison_record("reversal", str(lhs), str(rhs), p=ctx.p, index=str(ix))


def verify_height_sum(k: int, s: int, ctx: PrimeCtx) -> VerificationRecord:
    """Unrestricted star family sum vanishes (except the empty (0,0) cell)."""
    if k < 0 or s < 0:
        raise ValueError(f"need k >= 0 and s >= 0, got k={k}, s={s}")
    if k == 0 and s == 0:
        raise ValueError("(k, s) = (0, 0) is excluded: its value is 1, not 0")
    if k == 0 or k < 2 * s:
        raise InfeasibleFamilyError(f"no indices of weight {k} and height {s}")
    if ctx.p <= k + 1:
        return skipped_record("heightsum", f"p <= {k + 1}", p=ctx.p, k=k, s=s)
    lhs = family_sum_star_unrestricted(k, s, ctx).value
    return comparison_record("heightsum", str(lhs), "0", p=ctx.p, k=k, s=s)


# ---------------------------------------------------------------------------
# batch driving


def check_tasks(check: str, *, k_max: int = 8, w_max: int = 6,
                s_max: int | None = None) -> list[tuple]:
    """Parameter grid for one check, in deterministic order."""
    if check in ("ao", "lm", "lemma"):
        out = []
        for k in range(2, k_max + 1):
            top = k // 2 if s_max is None else min(k // 2, s_max)
            for s in range(1, top + 1):
                out.append((check, k, s))
        return out
    if check in ("antipode", "reversal"):
        return [(check, tuple(ix)) for ix in iter_indices_of_weight(w_max)]
    if check == "heightsum":
        out = []
        for k in range(1, k_max + 1):
            top = k // 2 if s_max is None else min(k // 2, s_max)
            for s in range(0, top + 1):
                if next(iter_all_indices(k, s), None) is not None:
                    out.append((check, k, s))
        return out
    raise ValueError(f"unknown check {check!r}; known: {', '.join(CHECK_NAMES)}")


def evaluate_task(task: tuple, ctx: PrimeCtx) -> VerificationRecord:
    check = task[0]
    if check == "ao":
        return verify_ao(task[1], task[2], ctx)
    if check == "lm":
        return verify_lm(task[1], task[2], ctx)
    if check == "lemma":
        return verify_lemma(task[1], task[2], ctx)
    if check == "antipode":
        return verify_antipode(Index(task[1]), ctx)
    if check == "reversal":
        return verify_reversal(Index(task[1]), ctx)
    if check == "heightsum":
        return verify_height_sum(task[1], task[2], ctx)
    raise ValueError(f"unknown check {check!r}")


def _task_guard(task: tuple) -> int:
    """Largest prime that still gets skipped for this task."""
    if task[0] in ("antipode", "reversal"):
        return sum(task[1]) + 1
    return task[1] + 1


def evaluate_tasks_for_prime(p: int, tasks: list[tuple]) -> list[VerificationRecord]:
    """All records for one prime; builds the context only when needed."""
    ctx = None
    out = []
    for task in tasks:
        if p <= _task_guard(task):
            check = task[0]
            if check in ("antipode", "reversal"):
                out.append(skipped_record(check, f"p <= {_task_guard(task)}",
                                          p=p, index=str(Index(task[1]))))
            else:
                out.append(skipped_record(check, f"p <= {_task_guard(task)}",
                                          p=p, k=task[1], s=task[2]))
            continue
        if ctx is None:
            ctx = prime_ctx(p)
        out.append(evaluate_task(task, ctx))
    return out


def record_sort_key(rec: VerificationRecord):
    parts = tuple(Index.parse(rec.index)) if rec.index is not None else ()
    return (rec.check,
            rec.k if rec.k is not None else -1,
            rec.s if rec.s is not None else -1,
            parts,
            rec.p if rec.p is not None else -1)


def verify_range(checks, primes, *, k_max: int = 8, w_max: int = 6,
                 s_max: int | None = None) -> list[VerificationRecord]:
    """Cross product of checks, parameters, and primes, sorted by
    (check, k, s, index, p).  Skips propagate; failures never abort."""
    tasks: list[tuple] = []
    for check in checks:
        tasks.extend(check_tasks(check, k_max=k_max, w_max=w_max, s_max=s_max))
    records: list[VerificationRecord] = []
    for p in sorted(set(primes)):
        records.extend(evaluate_tasks_for_prime(p, tasks))
    records.sort(key=record_sort_key)
    return records
