"""Command-line front end: one subcommand per operation plus table reproduction.

Every run prints its result with a manifest (command, parameters, digits,
elapsed time and a hash of the output).  Exit codes: 0 ok, 2 usage,
3 precision refused, 4 long-run guard, 5 numeric failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from pathlib import Path

from mpmath import mp, mpf

from .precision import NumericFailure, PrecisionContext, PrecisionRefused, correct_decimals, fmt, truncate_decimals
from .specfun import T1_APPROX, precision_budget

EXIT_OK, EXIT_USAGE, EXIT_PRECISION, EXIT_LONG_RUN, EXIT_NUMERIC = 0, 2, 3, 4, 5
LONG_RUN_SECONDS = 600


class LongRunRequired(RuntimeError):
    pass


def _guard(args, projected_seconds: float, what: str) -> None:
    if projected_seconds > LONG_RUN_SECONDS and not args.long_run:
        raise LongRunRequired(f"{what} is projected to take about {projected_seconds / 60:.0f} min; pass --long-run")


def _jet_seconds(m: int, digits: int) -> float:
    # Calibrated on order-200 jets at 520 digits (~1 s); cost ~ order^2 * digits^1.6.
    return 1.0 * (m / 100) ** 2 * (digits / 520) ** 1.6


def _s(x, digits):
    with mp.workdps(digits + 10):
        return fmt(x, digits)


def parse_bigint(text: str) -> int:
    """Integers written plainly or as 10^k, 10**k or 1ek."""
    t = text.strip().replace("**", "^")
    if "^" in t:
        base, exp = t.split("^")
        return int(base) ** int(exp)
    if "e" in t.lower():
        mant, exp = t.lower().split("e")
        if not mant.isdigit():
            raise ValueError(f"not an integer: {text!r}")
        return int(mant) * 10 ** int(exp)
    return int(t)


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, certified_digits)


def cmd_next_prime(args, ctx):
    from . import prime_recurrence as pr

    fn = {
        "golomb": pr.golomb_next_prime,
        "variant": pr.golomb_variant_next_prime,
        "pzeta": pr.pzeta_next_prime,
    }[args.method]
    return {"value": _s(fn(args.n, args.s, ctx), ctx.digits)}, ctx.digits


def cmd_prime_zeta(args, ctx):
    from .prime_recurrence import prime_zeta_value

    r = prime_zeta_value(args.s, ctx, mode=args.mode, depth=args.depth)
    cert = None
    if args.mode == "mobius-log":
        cert = ctx.digits
    elif args.mode == "direct":
        with ctx.working():
            cert = max(0, min(ctx.digits, int(-mp.log10(r.error_bound / r.value))))
    return {"value": _s(r.value, ctx.digits), "depth": r.depth}, cert


def cmd_stieltjes(args, ctx):
    from .stieltjes import elimination_digits, stieltjes_constants, truncation_decimals

    work = ctx.digits + elimination_digits(args.k)
    _guard(args, 5.0 * (args.k / 128) ** 3 * (work / 700) ** 1.6, f"Stieltjes system k={args.k}")
    count = args.count if args.count is not None else min(args.k, 11)
    vals = stieltjes_constants(args.k, ctx, count)
    cert = min(ctx.digits, truncation_decimals(args.k, count - 1))
    return {"values": [_s(v, ctx.digits) for v in vals]}, cert


def cmd_z2m(args, ctx):
    from .secondary_zeta import ZEvenRequest, z_even

    _guard(args, _jet_seconds(args.m, ctx.digits), f"Z({2 * args.m})")
    z = z_even(ZEvenRequest(args.m, args.variant, ctx))
    cert = max(0, min(ctx.digits, ctx.working_digits - int(math.ceil(2 * args.m * math.log10(4 * T1_APPROX))) - 5))
    return {"value": _s(z, min(ctx.digits, max(cert, 1)))}, cert


def _ledger(args, n):
    from .zeros import ZeroLedger, reference_ledger

    if args.ledger:
        led = ZeroLedger.load(args.ledger)
        if len(led) < n:
            raise ValueError(f"{args.ledger} holds {len(led)} zeros, {n} needed")
        return led.truncated(n)
    return reference_ledger(n)


def _cache(args, name, records):
    if not args.cache_dir:
        return
    from .zeros import ZeroLedger

    d = Path(args.cache_dir)
    d.mkdir(parents=True, exist_ok=True)
    led = ZeroLedger()
    for r in records:
        led.append(r)
    led.save(d / name)


def cmd_next_zero(args, ctx):
    from .zeros import next_zero

    _guard(args, _jet_seconds(args.m, ctx.digits), f"next zero at m={args.m}")
    led = _ledger(args, args.n)
    rec = next_zero(led, args.n, args.m, ctx)
    _cache(args, f"next-zero-n{args.n}-m{args.m}.tsv", list(led) + [rec])
    return {"value": rec.t, "index": rec.index, "source": rec.source}, rec.certified_digits


def cmd_zeros_from_primes(args, ctx):
    from .zeros import MSchedule, run_duality_pipeline

    _guard(args, _jet_seconds(args.m, ctx.digits) * 1.5, f"duality pipeline from m={args.m}")
    recs, err = run_duality_pipeline(MSchedule(args.m, args.step_m, args.pmax), ctx)
    _cache(args, f"duality-m{args.m}-step{-args.step_m}-p{args.pmax}.tsv", recs)
    payload = {
        "values": [r.t for r in recs],
        "certified": [r.certified_digits for r in recs],
        "stopped_by": None if err is None else f"{type(err).__name__}: {err}",
    }
    return payload, [r.certified_digits for r in recs]


def cmd_leclair(args, ctx):
    from .zeros import leclair_approx

    n = parse_bigint(args.n)
    v = leclair_approx(n, ctx)
    with mp.workdps(max(ctx.digits, len(str(n)) + 20) + 10):
        text = truncate_decimals(v, args.places)
    return {"value": text}, None


def cmd_pi_explicit(args, ctx):
    from .identities import pi_from_J, riemann_J

    pi_x = pi_from_J(args.x, args.zeros, ctx)
    j = riemann_J(args.x, args.zeros, ctx)
    with ctx.working():
        rounded = int(mp.nint(pi_x))
    return {"value": _s(pi_x, 15), "J": _s(j, 15), "rounded": rounded}, None


def cmd_identities(args, ctx):
    from . import identities as idn
    from .zeros import reference_ledger

    t1 = reference_ledger(1)[0].t
    s_min, r_min = idn.sball_minimum(ctx)
    gamma_alt = idn.gamma_from_zero(t1, args.k, ctx, "alternating")
    gamma_dir = idn.gamma_from_zero(t1, args.k, ctx, "direct")
    rho = idn.rho_abs_sq(t1, args.k, ctx)
    partial, target = idn.zero_sum_constant(reference_ledger(), 100, ctx)
    out = {
        "sball_minimum": [_s(s_min, 15), _s(r_min, 15)],
        "gamma_alternating": _s(gamma_alt, 15),
        "gamma_direct": _s(gamma_dir, 15),
        "rho1_abs_sq_inverse": _s(rho, 15),
        "zero_sum_100": _s(partial, 15),
        "zero_sum_target": _s(target, 15),
    }
    return {"values": out}, None


# ---------------------------------------------------------------------------
# tables


def _table_1(scale, args):
    from .prime_recurrence import golomb_next_prime

    ctx = PrecisionContext(max(args.digits, 200))
    rows = []
    for n in list(range(10)) + [99, 999]:
        row = {"n": n}
        for s in (10, 100):
            with ctx.working():
                row[f"s={s}"] = truncate_decimals(golomb_next_prime(n, s, ctx), 15)
        rows.append(row)
    return rows


def _table_2(scale, args):
    from .stieltjes import stieltjes_constants

    k, digits = (128, 600) if scale == "desk" else (500, 2000)
    ctx = PrecisionContext(max(args.digits, digits))
    _guard(args, 5.0 * (k / 128) ** 3 * ((ctx.digits + 0.75 * k) / 700) ** 1.6, f"Stieltjes table at k={k}")
    vals = stieltjes_constants(k, ctx, 11)
    rows = []
    with mp.workdps(60):
        for n, v in enumerate(vals):
            ref = mp.stieltjes(n)
            rows.append({"n": n, "gamma": _s(v, 30), "significant_digits": _sig(v, ref)})
    return rows


def _sig(v, ref):
    from .precision import significant_digits

    return significant_digits(v, ref)


def _table_3(scale, args):
    from .prime_recurrence import pzeta_next_prime

    ctx = PrecisionContext(max(args.digits, 40))
    rows = []
    for n in range(10):
        row = {"n": n}
        for s in (10, 100):
            with ctx.working():
                row[f"s={s}"] = truncate_decimals(pzeta_next_prime(n, s, ctx), 15)
        rows.append(row)
    return rows


def _table_4(scale, args):
    from .zeros import reference_ledger, t1_direct

    ms = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 15, 20, 25, 50, 100] + ([250] if scale == "full" else [])
    ref = reference_ledger(1)[0]
    rows = []
    for m in ms:
        ctx = PrecisionContext(max(args.digits, precision_budget(m, 40)))
        _guard(args, _jet_seconds(m, ctx.digits), f"t1 at m={m}")
        v = t1_direct(m, ctx)
        with mp.workdps(ctx.digits + 10):
            rows.append({"m": m, "t1": truncate_decimals(v, 30), "correct_decimals": max(0, correct_decimals(v, ref.value()))})
    return rows


def _table_5(scale, args):
    from .zeros import next_zero, reference_ledger, required_digits

    m = 100 if scale == "desk" else 250
    ref = reference_ledger(10)
    rows = []
    for n in range(1, 10):
        ctx = PrecisionContext(max(args.digits, required_digits(n, m, 40)))
        _guard(args, _jet_seconds(m, ctx.digits), f"zero recurrence at m={m}")
        rec = next_zero(ref.truncated(n), n, m, ctx)
        with mp.workdps(ctx.digits + 10):
            rows.append(
                {
                    "n": n,
                    "t": rec.t[:33],
                    "certified": rec.certified_digits,
                    "correct_decimals": max(0, correct_decimals(rec.value(), ref[n].value())),
                }
            )
    return rows


def _table_6(scale, args):
    from .zeros import MSchedule, reference_ledger, required_digits, run_duality_pipeline

    sched = MSchedule(50, -10, 500) if scale == "desk" else MSchedule(250, -75, 2000)
    ctx = PrecisionContext(max(args.digits, required_digits(0, sched.m_start, 40)))
    _guard(args, _jet_seconds(sched.m_start, ctx.digits) * 1.5, "duality pipeline")
    recs, err = run_duality_pipeline(sched, ctx)
    ref = reference_ledger(10)
    rows = []
    for r, m in zip(recs, sched.values()):
        with mp.workdps(ctx.digits + 10):
            rows.append(
                {
                    "m": m,
                    "n": r.index - 1,
                    "t": r.t[:33],
                    "certified": r.certified_digits,
                    "correct_decimals": max(0, correct_decimals(r.value(), ref[r.index - 1].value())),
                }
            )
    if err is not None:
        rows.append({"stopped_by": f"{type(err).__name__}: {err}"})
    return rows


TABLES = {1: _table_1, 2: _table_2, 3: _table_3, 4: _table_4, 5: _table_5, 6: _table_6}


def cmd_table(args, ctx):
    if args.scale == "full" and not args.long_run:
        raise LongRunRequired("full-scale tables need --long-run")
    return {"rows": TABLES[args.id](args.scale, args)}, None


# ---------------------------------------------------------------------------


COMMANDS = {
    "next-prime": cmd_next_prime,
    "prime-zeta": cmd_prime_zeta,
    "stieltjes": cmd_stieltjes,
    "z2m": cmd_z2m,
    "next-zero": cmd_next_zero,
    "zeros-from-primes": cmd_zeros_from_primes,
    "leclair": cmd_leclair,
    "pi-explicit": cmd_pi_explicit,
    "identities": cmd_identities,
    "table": cmd_table,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=100, help="working precision in decimal digits")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--long-run", action="store_true", help="allow runs projected to exceed 10 minutes")
    common.add_argument("--output", default=None, help="also write the JSON result to this file")

    p = argparse.ArgumentParser(prog="zetarec", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("next-prime", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=float, default=100)
    q.add_argument("--method", choices=("golomb", "variant", "pzeta"), default="golomb")

    q = sub.add_parser("prime-zeta", parents=[common])
    q.add_argument("--s", type=float, required=True)
    q.add_argument("--mode", choices=("direct", "mobius-log", "nested-radical"), default="direct")
    q.add_argument("--depth", type=int, default=None)

    q = sub.add_parser("stieltjes", parents=[common])
    q.add_argument("--k", type=int, default=128)
    q.add_argument("--count", type=int, default=None)

    q = sub.add_parser("z2m", parents=[common])
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--variant", choices=("voros", "series", "hurwitz"), default="hurwitz")

    q = sub.add_parser("next-zero", parents=[common])
    q.add_argument("--n", type=int, required=True, help="number of known zeros used")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--ledger", default=None, help="zero ledger file (default: bundled reference zeros)")

    q = sub.add_parser("zeros-from-primes", parents=[common])
    q.add_argument("--m", type=int, default=50)
    q.add_argument("--step-m", type=int, default=-10)
    q.add_argument("--pmax", type=int, default=500)

    q = sub.add_parser("leclair", parents=[common])
    q.add_argument("--n", required=True)
    q.add_argument("--places", type=int, default=5)

    q = sub.add_parser("pi-explicit", parents=[common])
    q.add_argument("--x", type=float, required=True)
    q.add_argument("--zeros", type=int, default=100)

    q = sub.add_parser("identities", parents=[common])
    q.add_argument("--k", type=int, default=1000)

    q = sub.add_parser("table", parents=[common])
    q.add_argument("--id", type=int, choices=sorted(TABLES), required=True)
    q.add_argument("--scale", choices=("desk", "full"), default="desk")
    return p


def _params(args) -> dict:
    skip = {"command", "format", "output", "cache_dir", "digits"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _output_hash(command, params, digits, payload) -> str:
    blob = json.dumps({"command": command, "params": params, "digits": digits, "result": payload}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _render_text(result: dict) -> str:
    lines = [f"# {result['command']}  digits={result['digits']}  elapsed={result['elapsed_ms']} ms"]
    for key in ("value", "values", "rows"):
        if key not in result:
            continue
        val = result[key]
        if key == "rows":
            for row in val:
                lines.append("  ".join(f"{k}={v}" for k, v in row.items()))
        elif isinstance(val, dict):
            lines.extend(f"{k}: {v}" for k, v in val.items())
        elif isinstance(val, list):
            lines.extend(str(v) for v in val)
        else:
            lines.append(str(val))
    for key, val in result.items():
        if key not in ("command", "params", "digits", "value", "values", "rows", "elapsed_ms", "manifest", "certified_digits"):
            lines.append(f"{key}: {val}")
    lines.append(f"# certified_digits={result['certified_digits']}  sha256={result['manifest']['output_hash'][:16]}")
    return "\n".join(lines)


def _fail(args, category: str, code: int, exc: Exception) -> int:
    err = {"error": category, "message": str(exc)}
    if isinstance(exc, PrecisionRefused):
        err["required_digits"] = exc.required_digits
    print(json.dumps(err), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        ctx = PrecisionContext(args.digits)
        payload, certified = COMMANDS[args.command](args, ctx)
    except PrecisionRefused as exc:
        return _fail(args, "precision-refused", EXIT_PRECISION, exc)
    except LongRunRequired as exc:
        return _fail(args, "long-run-guard", EXIT_LONG_RUN, exc)
    except (NumericFailure, ArithmeticError) as exc:
        return _fail(args, "numeric-failure", EXIT_NUMERIC, exc)
    except ValueError as exc:
        return _fail(args, "usage", EXIT_USAGE, exc)
    elapsed = int(round((time.perf_counter() - start) * 1000))
    params = _params(args)
    result = {"command": args.command, "params": params, "digits": args.digits}
    result.update(payload)
    result["certified_digits"] = certified
    result["elapsed_ms"] = elapsed
    result["manifest"] = {
        "command": args.command,
        "params": params,
        "digits": args.digits,
        "wall_ms": elapsed,
        "output_hash": _output_hash(args.command, params, args.digits, payload),
    }
    text = json.dumps(result, indent=2) if args.format == "json" else _render_text(result)
    print(text)
    if args.output:
        Path(args.output).write_text(json.dumps(result, indent=2) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
