"""Command-line entry point: ``sturmian-apr {apr,itineraries,delta-table,verify}``.

Exit codes: 0 success, 1 mathematical error (zero intercept, iteration cap),
2 bad input, 3 failed verification.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import kernels
from .contfrac import ContinuedFraction, as_slope
from .delta import delta_values
from .errors import InfiniteResult, IterationCapExceeded, ParseError, SturmianError
from .field import FieldElement, parse_field
from .iet import DEFAULT_MAX_STEPS, induce, make_two_iet
from .returns import apr_set
from .verify import DEFAULT_SEED, SUITES, run_verification

SCHEMA = 1
EXIT_OK, EXIT_MATH, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- value rendering -------------------------------------------------------------


def exact(x: FieldElement) -> str:
    return str(x)


def human(x: FieldElement) -> str:
    if x.is_rational and x.c == 1:
        return str(x)
    return f"{x}  ~ {x.approx(12)}"


def shift(t: FieldElement) -> str:
    """``x + t`` written with a sign in front of the magnitude."""
    mag = str(abs(t))
    if t.a and t.b and t.c == 1:  # bare a+b*sqrt(d) has no brackets of its own
        mag = f"({mag})"
    return f"x {'-' if t < 0 else '+'} {mag}"


def word_set(words) -> str:
    return "{" + ", ".join(words) + "}"


def slope_dict(cf: ContinuedFraction) -> dict:
    return {"continued_fraction": str(cf), "value": exact(cf.value())}


def _table(rows, header=None) -> str:
    rows = [[str(c) for c in r] for r in rows]
    if header:
        rows.insert(0, list(header))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    if header:
        lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


# -- input parsing ---------------------------------------------------------------


def parse_slope(text: str) -> ContinuedFraction:
    text = text.strip()
    if re.fullmatch(r"[0-9.eE+-]+", text) and ("." in text or "e" in text.lower()):
        raise UsageError(f"decimal slope {text!r}: give a continued fraction like [0;(1)] "
                         "or an exact expression like (sqrt(5)-1)/2")
    try:
        return as_slope(text)
    except SturmianError as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(f"bad slope {text!r}: {exc}") from exc


def parse_value(text: str, what: str) -> FieldElement:
    try:
        return parse_field(text)
    except ParseError as exc:
        raise UsageError(f"bad {what} {text!r}: {exc}") from exc


def parse_interval(text: str) -> tuple[FieldElement, FieldElement]:
    m = re.fullmatch(r"\s*\[(.+),(.+)\)\s*", text)
    if not m:
        raise UsageError(f"interval must look like [a,b): {text!r}")
    return parse_value(m.group(1), "interval end"), parse_value(m.group(2), "interval end")


def _same_field(cf: ContinuedFraction, *xs: FieldElement):
    d = cf.value().d
    for x in xs:
        if x.d not in (0, d):
            raise UsageError(f"{x} is not in Q(sqrt({d})), the field of the slope")


# -- commands --------------------------------------------------------------------


def cmd_apr(args) -> tuple[dict, str]:
    cf = parse_slope(args.slope)
    rho = parse_value(args.intercept, "intercept")
    _same_field(cf, rho)
    if not 0 <= rho < 1:
        raise UsageError(f"intercept {rho} outside [0, 1)")
    res = apr_set(cf, rho)
    idx = res.indices
    data = {
        "schema": SCHEMA,
        "command": "apr",
        "slope": slope_dict(cf),
        "intercept": exact(rho),
        "r": list(res.r_set),
        "r_prime": list(res.r_prime_set),
        "apr": list(res.apr),
        "counts": res.counts,
        "minimal_indices": {"k": idx.k, "s": idx.s, "flat_index": idx.flat_index},
        "cardinality": {"count": res.cardinality.count, "case": res.cardinality.case},
    }
    text = _table([
        ["slope", f"{cf} = {human(cf.value())}"],
        ["intercept", human(rho)],
        ["R", word_set(res.r_set)],
        ["R'", word_set(res.r_prime_set)],
        ["APR", word_set(res.apr)],
        ["counts", f"#R={len(res.r_set)}  #R'={len(res.r_prime_set)}  #APR={len(res.apr)}"],
        ["(k0, s0)", f"({idx.k}, {idx.s})  flat index {idx.flat_index}"],
        ["case", f"{res.cardinality.case}  predicted #APR={res.cardinality.count}"],
    ])
    return data, text


def cmd_itineraries(args) -> tuple[dict, str]:
    cf = parse_slope(args.slope)
    if (args.interval is None) == (args.beta_at_delta is None):
        raise UsageError("give exactly one of --interval and --beta-at-delta")
    if args.interval is not None:
        left, right = parse_interval(args.interval)
    else:
        if args.beta_at_delta < 0:
            raise UsageError("--beta-at-delta must be >= 0")
        left, right = FieldElement(0), delta_values(cf, args.beta_at_delta + 1)[-1].value
    _same_field(cf, left, right)
    if not 0 <= left < right <= 1:
        raise UsageError(f"need 0 <= a < b <= 1 for [a, b), got [{left}, {right})")
    res = induce(make_two_iet(cf.value()), left, right, args.max_steps)
    pieces = [{"left": exact(p.left), "right": exact(p.right), "return_time": p.return_time,
               "itinerary": p.itinerary, "translation": exact(p.translation)} for p in res.pieces]
    data = {
        "schema": SCHEMA,
        "command": "itineraries",
        "slope": slope_dict(cf),
        "interval": {"left": exact(left), "right": exact(right)},
        "pieces": pieces,
        "itineraries": sorted(res.itineraries, key=lambda w: (len(w), w)),
        "induced": {"permutation": res.induced.permutation,
                    "breakpoints": [exact(b) for b in res.induced.breakpoints],
                    "translations": [exact(t) for t in res.induced.translations]},
        "steps": res.steps,
    }
    rows = [[f"[{p.left}, {p.right})", p.return_time, shift(p.translation), p.itinerary]
            for p in res.pieces]
    text = "\n".join([
        f"slope {cf} = {human(cf.value())}",
        f"I = [{human(left)}, {human(right)})",
        "",
        _table(rows, ("piece", "r(x)", "T_I(x)", "itinerary")),
        "",
        f"{len(res.itineraries)} distinct itineraries; induced map on [0,1): "
        f"{res.induced.permutation} with cuts {', '.join(map(str, res.induced.breakpoints))}",
    ])
    return data, text


def cmd_delta_table(args) -> tuple[dict, str]:
    cf = parse_slope(args.slope)
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    values = delta_values(cf, args.count)
    # the stream is strictly decreasing; refuse to print anything that says otherwise
    for a, b in zip(values, values[1:]):
        if not b.value < a.value:
            raise AssertionError(f"delta sequence not decreasing at {b.flat_index}")
    data = {
        "schema": SCHEMA,
        "command": "delta-table",
        "slope": slope_dict(cf),
        "deltas": [{"n": v.flat_index, "k": v.k, "s": v.s, "value": exact(v.value)} for v in values],
    }
    rows = [[v.flat_index, v.k, v.s, str(v.value), v.value.approx(12)] for v in values]
    text = f"slope {cf} = {human(cf.value())}\n\n" + _table(rows, ("n", "k", "s", "delta", "approx"))
    return data, text


def cmd_verify(args) -> tuple[dict, str]:
    t0 = time.perf_counter()
    results = run_verification(args.suite, args.seed, invert_lex=args.inject_lex_bug)
    elapsed = time.perf_counter() - t0
    data = {
        "schema": SCHEMA,
        "command": "verify",
        "seed": args.seed,
        "backend": kernels.BACKEND,
        "passed": all(r.passed for r in results),
        "suites": [r.as_dict() for r in results],
    }
    lines = [f"seed {args.seed}, kernels: {kernels.BACKEND}"]
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<15} {r.checked} checks")
        lines += [f"      note: {n}" for n in r.notes]
        lines += [f"      counterexample: {f}" for f in r.failures]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} suites passed in {elapsed:.1f}s")
    return data, "\n".join(lines)


COMMANDS = {"apr": cmd_apr, "itineraries": cmd_itineraries,
            "delta-table": cmd_delta_table, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--out", metavar="FILE", help="write the output here instead of stdout")

    slope = argparse.ArgumentParser(add_help=False)
    slope.add_argument("--slope", required=True,
                       help='continued fraction with explicit period, e.g. "[0;2,(1)]", '
                            'or an exact value such as "(sqrt(5)-1)/2"')

    p = argparse.ArgumentParser(prog="sturmian-apr",
                                description="Abelian returns to prefixes of Sturmian words.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("apr", parents=[common, slope], help="R, R', APR and the predicted size")
    a.add_argument("--intercept", required=True, help='exact value in [0, 1), e.g. "(3-sqrt(5))/2"')

    it = sub.add_parser("itineraries", parents=[common, slope],
                        help="first-return itineraries to an interval")
    it.add_argument("--interval", help='"[a,b)" with exact ends')
    it.add_argument("--beta-at-delta", type=int, metavar="N", help="use I = [0, delta_N)")
    it.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)

    d = sub.add_parser("delta-table", parents=[common, slope], help="first delta values")
    d.add_argument("--count", type=int, default=10)

    v = sub.add_parser("verify", parents=[common], help="seeded cross-check suites")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    v.add_argument("--inject-lex-bug", action="store_true", help=argparse.SUPPRESS)
    return p


def _emit(args, data: dict, text: str):
    out = json.dumps(data, indent=2) if args.format == "json" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        data, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InfiniteResult as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except IterationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    _emit(args, data, text)
    if args.command == "verify" and not data["passed"]:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
