"""Command-line front end.

Four subcommands:

* ``compute``: one truncated harmonic sum mod one prime.
* ``verify``: identity sweeps over a prime range (checks: ao, lm,
  lemma, antipode, reversal, heightsum), JSONL or CSV records,
  prime-sharded parallelism, resumable via the output file itself.
* ``zsweep``: the zeta-residue hunt with the two-method cross-check.
* ``symbolic``: exact-arithmetic suites (gauss, anl, phi0, hypcong).

Exit codes: 0 all records passed or were skipped, 1 at least one record
failed, 2 usage error.  Output is deterministic: fixed seeds give
byte-identical JSONL, and the record order does not depend on --jobs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import os
import sys

from .bernoulli import ZetaSweepRow, zeta_sweep_row
from .indices import Index
from .modfield import PrimeCtx, is_prime, primes_in_range
from .harmonic import mhs_star, mhs_strict
from .symbolic import (
    run_anl_suite,
    run_gauss_suite,
    run_hypcong_suite,
    run_phi0_suite,
)
from .verify import CHECK_NAMES, check_tasks, evaluate_tasks_for_prime, record_sort_key

VERIFY_COLUMNS = ("check", "k", "s", "index", "p", "lhs", "rhs", "pass", "skipped", "reason")
ZSWEEP_COLUMNS = ("check", "k", "p", "lhs", "rhs", "pass", "skipped", "reason", "zero", "cross")


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _parse_prime_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad prime range {text!r}")
    return primes_in_range(lo, hi)


def _default_jobs() -> int:
    env = os.environ.get("FMZV_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _json_line(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def _csv_line(record: dict, columns) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="")
    row = []
    for col in columns:
        value = record.get(col)
        if value is None:
            row.append("")
        elif isinstance(value, bool):
            row.append("true" if value else "false")
        else:
            row.append(str(value))
    writer.writerow(row)
    return buf.getvalue()


class _Emitter:
    """Streams record lines to stdout or an (append-mode) output file."""

    def __init__(self, out_path, fmt, columns, resuming):
        self.fmt = fmt
        self.columns = columns
        self.path = out_path
        if out_path is None:
            self.handle = sys.stdout
            self.owns = False
            fresh = True
        else:
            exists = os.path.exists(out_path) and os.path.getsize(out_path) > 0
            mode = "a" if resuming and exists else "w"
            self.handle = open(out_path, mode, newline="")
            self.owns = True
            fresh = mode == "w"
        if fmt == "csv" and fresh:
            self.handle.write(",".join(columns) + "\n")

    def emit(self, record: dict):
        if self.fmt == "csv":
            self.handle.write(_csv_line(record, self.columns) + "\n")
        else:
            self.handle.write(_json_line(record) + "\n")

    def flush(self):
        self.handle.flush()

    def close(self):
        if self.owns:
            self.handle.close()


def _last_completed_prime(path, fmt) -> int | None:
    """Scan the checkpoint (= output) file for the last finished prime."""
    if path is None or not os.path.exists(path):
        return None
    last = None
    with open(path, newline="") as handle:
        if fmt == "csv":
            reader = csv.reader(handle)
            header = next(reader, None)
            if not header or "p" not in header:
                return None
            p_col = header.index("p")
            for row in reader:
                if len(row) > p_col and row[p_col]:
                    last = int(row[p_col])
        else:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError:
                    continue  # torn trailing line: ignore
                if "p" in rec:
                    last = int(rec["p"])
    return last


# ---------------------------------------------------------------------------
# verify


def _verify_worker(args):
    p, tasks = args
    records = evaluate_tasks_for_prime(p, list(tasks))
    records.sort(key=record_sort_key)
    return [r.to_json_dict() for r in records]


def cmd_verify(args) -> int:
    checks = [c for c in args.checks.split(",") if c]
    for c in checks:
        if c not in CHECK_NAMES:
            return _fail(f"unknown check {c!r}; known: {', '.join(CHECK_NAMES)}")
    if not checks:
        return _fail("no checks given")
    try:
        primes = _parse_prime_range(args.primes)
    except ValueError as err:
        return _fail(str(err))
    if args.resume and not args.out:
        return _fail("--resume requires --out")
    tasks = []
    for c in checks:
        tasks.extend(check_tasks(c, k_max=args.kmax, w_max=args.wmax, s_max=args.smax))
    if args.resume:
        last = _last_completed_prime(args.out, args.format)
        if last is not None:
            primes = [p for p in primes if p > last]
    jobs = args.jobs if args.jobs else _default_jobs()
    emitter = _Emitter(args.out, args.format, VERIFY_COLUMNS, args.resume)
    failed = 0
    total = 0
    skipped = 0
    try:
        shard_args = [(p, tuple(tasks)) for p in primes]
        if jobs > 1 and len(shard_args) > 1:
            with multiprocessing.Pool(processes=jobs) as pool:
                shards = pool.imap(_verify_worker, shard_args)
                for shard in shards:
                    for rec in shard:
                        total += 1
                        failed += 0 if rec["pass"] else 1
                        skipped += 1 if rec["skipped"] else 0
                        emitter.emit(rec)
                    emitter.flush()
        else:
            for shard_arg in shard_args:
                for rec in _verify_worker(shard_arg):
                    total += 1
                    failed += 0 if rec["pass"] else 1
                    skipped += 1 if rec["skipped"] else 0
                    emitter.emit(rec)
                emitter.flush()
    finally:
        emitter.close()
    print(f"verify: {total} records, {failed} failed, {skipped} skipped",
          file=sys.stderr)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# zsweep


def _zsweep_record(row: ZetaSweepRow) -> dict:
    out = {"check": "zsweep", "k": row.k, "p": row.p}
    if row.skipped:
        out["pass"] = True
        out["skipped"] = True
        out["reason"] = row.reason
        return out
    out["lhs"] = str(row.residue)
    out["rhs"] = "" if row.cross_value is None else str(row.cross_value)
    out["pass"] = row.cross != "fail"
    out["skipped"] = False
    if row.reason is not None:
        out["reason"] = row.reason
    out["zero"] = bool(row.zero)
    out["cross"] = row.cross
    return out


def cmd_zsweep(args) -> int:
    if args.k < 2:
        return _fail(f"need k >= 2, got {args.k}")
    try:
        primes = _parse_prime_range(args.primes)
    except ValueError as err:
        return _fail(str(err))
    if args.resume and not args.out:
        return _fail("--resume requires --out")
    if args.resume:
        last = _last_completed_prime(args.out, args.format)
        if last is not None:
            primes = [p for p in primes if p > last]
    emitter = _Emitter(args.out, args.format, ZSWEEP_COLUMNS, args.resume)
    zeros = fails = degenerate = skips = 0
    try:
        for p in primes:
            row = zeta_sweep_row(args.k, p)
            if row.skipped:
                skips += 1
            else:
                zeros += 1 if row.zero else 0
                fails += 1 if row.cross == "fail" else 0
                degenerate += 1 if row.cross == "degenerate" else 0
            emitter.emit(_zsweep_record(row))
            emitter.flush()
    finally:
        emitter.close()
    print(
        f"zsweep k={args.k}: {len(primes)} primes, {zeros} zero residues, "
        f"{fails} cross-check failures, {degenerate} degenerate, {skips} skipped",
        file=sys.stderr,
    )
    return 1 if fails else 0


# ---------------------------------------------------------------------------
# compute


def cmd_compute(args) -> int:
    try:
        ix = Index.parse(args.index)
    except ValueError as err:
        return _fail(str(err))
    try:
        ctx = PrimeCtx(args.prime)
    except (ValueError, TypeError) as err:
        return _fail(str(err))
    if ctx.p <= ix.weight + 1:
        return _fail(f"prime {ctx.p} too small for weight {ix.weight}: need p > weight+1")
    value = mhs_star(ix, ctx) if args.star else mhs_strict(ix, ctx)
    star = "true" if args.star else "false"
    print(f"index={args.index} prime={ctx.p} star={star} value={value.value}")
    return 0


# ---------------------------------------------------------------------------
# symbolic


def cmd_symbolic(args) -> int:
    suite = args.suite
    if suite == "gauss":
        seed = args.seed if args.seed is not None else 42
        records = run_gauss_suite(m_max=args.mmax, pairs=args.pairs, seed=seed)
    elif suite == "anl":
        records = run_anl_suite(n_max=args.nmax if args.nmax else 6)
    elif suite == "phi0":
        records = run_phi0_suite(n_max=args.nmax if args.nmax else 5, k_max=args.kmax)
    elif suite == "hypcong":
        if not args.prime:
            return _fail("hypcong needs --prime")
        if not is_prime(args.prime) or args.prime < 5:
            return _fail(f"{args.prime} is not an odd prime >= 5")
        seed = args.seed if args.seed is not None else 7
        records = run_hypcong_suite(args.prime, samples=args.samples, seed=seed)
    else:  # pragma: no cover - argparse choices guard this
        return _fail(f"unknown suite {suite!r}")
    handle = open(args.out, "w", newline="") if args.out else sys.stdout
    failed = 0
    try:
        for rec in records:
            d = rec.to_json_dict()
            failed += 0 if d["pass"] else 1
            handle.write(_json_line(d) + "\n")
    finally:
        if args.out:
            handle.close()
    print(f"symbolic {suite}: {len(records)} records, {failed} failed",
          file=sys.stderr)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmzv",
        description="Finite multiple zeta value sweeps and exact symbolic checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="one truncated harmonic sum mod p")
    p_compute.add_argument("--index", required=True,
                           help='comma-separated parts, e.g. "2,1"; "" is empty')
    p_compute.add_argument("--prime", type=int, required=True)
    p_compute.add_argument("--star", action="store_true",
                           help="non-strict (>=) chains instead of strict")
    p_compute.set_defaults(func=cmd_compute)

    p_verify = sub.add_parser("verify", help="identity sweeps over a prime range")
    p_verify.add_argument("checks",
                          help=f"comma-separated subset of: {','.join(CHECK_NAMES)}")
    p_verify.add_argument("--kmax", type=int, default=8)
    p_verify.add_argument("--smax", type=int, default=None)
    p_verify.add_argument("--wmax", type=int, default=6,
                          help="max index weight for antipode/reversal")
    p_verify.add_argument("--primes", required=True, help='inclusive range "A..B"')
    p_verify.add_argument("--jobs", type=int, default=None,
                          help="worker processes (default: FMZV_JOBS or cores)")
    p_verify.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p_verify.add_argument("--out", default=None)
    p_verify.add_argument("--resume", action="store_true",
                          help="continue past the last prime recorded in --out")
    p_verify.set_defaults(func=cmd_verify)

    p_zsweep = sub.add_parser("zsweep", help="zeta-residue hunt over primes")
    p_zsweep.add_argument("--k", type=int, required=True)
    p_zsweep.add_argument("--primes", required=True)
    p_zsweep.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p_zsweep.add_argument("--out", default=None)
    p_zsweep.add_argument("--resume", action="store_true")
    p_zsweep.set_defaults(func=cmd_zsweep)

    p_symbolic = sub.add_parser("symbolic", help="exact-arithmetic check suites")
    p_symbolic.add_argument("suite", choices=("gauss", "anl", "phi0", "hypcong"))
    p_symbolic.add_argument("--nmax", type=int, default=None)
    p_symbolic.add_argument("--kmax", type=int, default=6)
    p_symbolic.add_argument("--mmax", type=int, default=8)
    p_symbolic.add_argument("--pairs", type=int, default=25)
    p_symbolic.add_argument("--prime", type=int, default=None)
    p_symbolic.add_argument("--samples", type=int, default=20)
    p_symbolic.add_argument("--seed", type=int, default=None)
    p_symbolic.add_argument("--out", default=None)
    p_symbolic.set_defaults(func=cmd_symbolic)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
