"""Command-line interface.

Exit status: 0 when the checked congruence holds, 3 when it is false, 1 on
usage or domain errors. Report bodies go to stdout (or ``--output``); sweep
summaries and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .arith import DEFAULT_MAX_FACTOR_INPUT
from .errors import DomainError, SizeError
from .report import (
    FORMATS,
    SCHEMAS,
    SWEEPABLE,
    ReportRecord,
    build_record,
    canonical_theorem_id,
    format_records,
    record_binom_mod,
    record_isprime,
    record_power_explorer,
    record_witness,
)
from .sweep import DEFAULT_MAX_INSTANCES, DEFAULT_MAX_N, Caps, SweepConfig, parse_int_set, read_config_file, run_sweep, summarize

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILED = 3

FORMAT_ENV = "BINOMPRIME_FORMAT"
_PARAM_FLAGS = ("p", "n", "m", "r", "N", "R", "alpha", "d", "q", "k", "bound")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        raise UsageError(message)


def natural(text: str) -> int:
    text = text.strip()
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a non-negative decimal integer, got {text!r}")
    return int(text)


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=FORMATS, default=None, help=f"report format (default ${FORMAT_ENV} or json-lines)")
    sp.add_argument("--max-p", type=natural, default=DEFAULT_MAX_FACTOR_INPUT, help="largest accepted prime-like input")
    sp.add_argument("--max-n", type=natural, default=DEFAULT_MAX_N, help="largest accepted size-like input")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="binomprime", description="Binomial congruences and the C(n,p) primality characterization.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("isprime", help="naive primality test via C(n,p) == floor(n/p) (mod p)")
    sp.add_argument("p", type=natural)
    sp.add_argument("--verify-n-max", type=natural, default=None, help="for primes, check every n up to this (default 4p)")
    _add_common(sp)

    sp = sub.add_parser("binom-mod", help="C(n,k) mod prime p by Lucas' theorem, cross-checked exactly")
    sp.add_argument("n", type=natural)
    sp.add_argument("k", type=natural)
    sp.add_argument("p", type=natural)
    _add_common(sp)

    sp = sub.add_parser("witness", help="refuting instance n = p + q for composite p")
    sp.add_argument("p", type=natural)
    _add_common(sp)

    sp = sub.add_parser("check", help="check a single theorem instance")
    sp.add_argument("theorem_id", help=", ".join(t.replace("_", "-") for t in SWEEPABLE))
    for name in _PARAM_FLAGS:
        sp.add_argument(f"--{name}", type=natural, default=None)
    _add_common(sp)

    sp = sub.add_parser("sweep", help="exhaustive sweep over a parameter grid")
    sp.add_argument("--config", default=None, help="flat key = value file; flags override it")
    sp.add_argument("--theorem", default=None)
    for name in _PARAM_FLAGS:
        sp.add_argument(f"--{name}", default=None, help="value, lo:hi or comma list")
    sp.add_argument("--primes-only", action="store_true", default=None)
    sp.add_argument("--engine", choices=("direct", "oracle"), default=None)
    sp.add_argument("--workers", type=natural, default=None)
    sp.add_argument("--output", default=None)
    sp.add_argument("--max-rows", type=natural, default=None)
    sp.add_argument("--max-instances", type=natural, default=None)
    sp.add_argument("--format", choices=FORMATS, default=None)
    sp.add_argument("--max-p", type=natural, default=None)
    sp.add_argument("--max-n", type=natural, default=None)

    sp = sub.add_parser("explore-powers", help="largest l with C(np^k, mp^k) == C(n,m) (mod p^l) on a sweep")
    sp.add_argument("p", type=natural)
    sp.add_argument("k", type=natural)
    sp.add_argument("--bound", type=natural, required=True)
    _add_common(sp)
    return parser


def _resolve_format(flag: str | None, config: dict[str, str] | None = None) -> str:
    fmt = flag or (config or {}).get("format") or os.environ.get(FORMAT_ENV) or "json-lines"
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    return fmt


def _cap(value: int, cap: int, name: str) -> None:
    if value > cap:
        raise SizeError(f"{name}={value} exceeds cap {cap}")


def _emit_single(rec: ReportRecord, fmt: str) -> int:
    sys.stdout.write(format_records([rec], fmt, rec.theorem_id))
    return EXIT_OK if rec.holds else EXIT_FAILED


def cmd_isprime(args: argparse.Namespace) -> int:
    if args.p < 2:
        raise DomainError(f"p > 1 required, got {args.p}")
    _cap(args.p, args.max_p, "p")
    n_max = args.verify_n_max if args.verify_n_max is not None else 4 * args.p
    _cap(n_max, args.max_n, "verification n_max")
    return _emit_single(record_isprime(args.p, n_max), _resolve_format(args.format))


def cmd_binom_mod(args: argparse.Namespace) -> int:
    _cap(args.p, args.max_p, "p")
    return _emit_single(record_binom_mod(args.n, args.k, args.p), _resolve_format(args.format))


def cmd_witness(args: argparse.Namespace) -> int:
    _cap(args.p, args.max_p, "p")
    rec = record_witness(args.p)
    sys.stdout.write(format_records([rec], _resolve_format(args.format), rec.theorem_id))
    return EXIT_FAILED


def cmd_check(args: argparse.Namespace) -> int:
    tid = canonical_theorem_id(args.theorem_id)
    if tid not in SWEEPABLE:
        raise UsageError(f"cannot check {args.theorem_id!r}; choose from {', '.join(SWEEPABLE)}")
    params = {}
    for name in SCHEMAS[tid].params:
        value = getattr(args, name)
        if value is None:
            if tid == "mestrovic" and name == "bound":
                value = 50
            elif tid == "power_explorer" and name == "bound":
                value = 6
            else:
                raise UsageError(f"check {args.theorem_id} requires --{name}")
        _cap(value, args.max_p if name in ("p", "d", "q") else args.max_n, name)
        params[name] = value
    extra = [n for n in _PARAM_FLAGS if getattr(args, n) is not None and n not in params]
    if extra:
        raise UsageError(f"check {args.theorem_id} does not take --{extra[0]}")
    return _emit_single(build_record(tid, params), _resolve_format(args.format))


def sweep_config_from_args(args: argparse.Namespace) -> SweepConfig:
    file_cfg = read_config_file(args.config) if args.config else {}

    def pick(name: str) -> str | None:
        value = getattr(args, name, None)
        if value is not None:
            return value
        return file_cfg.get(name)

    theorem = pick("theorem")
    if theorem is None:
        raise UsageError("sweep requires --theorem (or 'theorem' in the config file)")
    tid = canonical_theorem_id(theorem)
    ranges = {}
    for name in _PARAM_FLAGS:
        raw = pick(name)
        if raw is not None:
            ranges[name] = parse_int_set(str(raw))
    known = {"theorem", "config", "primes_only", "engine", "workers", "output", "format",
             "max_rows", "max_instances", "max_p", "max_n", *_PARAM_FLAGS}
    unknown = set(file_cfg) - known
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")

    def pick_int(name: str, default: int) -> int:
        raw = pick(name)
        return default if raw is None else int(raw)

    primes_only = pick("primes_only")
    if isinstance(primes_only, str):
        primes_only = primes_only.lower() in ("1", "true", "yes", "on")
    defaults = Caps()
    return SweepConfig(
        theorem_id=tid,
        ranges=ranges,
        output_format=_resolve_format(args.format, file_cfg),
        output_path=pick("output"),
        worker_count=pick_int("workers", 1),
        primes_only=bool(primes_only),
        engine=pick("engine") or "direct",
        caps=Caps(
            max_p=pick_int("max_p", defaults.max_p),
            max_n=pick_int("max_n", defaults.max_n),
            max_rows=pick_int("max_rows", defaults.max_rows),
            max_instances=pick_int("max_instances", DEFAULT_MAX_INSTANCES),
        ),
    )


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = sweep_config_from_args(args)
    out = None
    if cfg.output_path:
        try:
            out = open(cfg.output_path, "w", encoding="utf-8", newline="")
        except OSError as exc:
            print(f"error: cannot write {cfg.output_path}: {exc.strerror}", file=sys.stderr)
            return EXIT_ERROR
    try:
        records = run_sweep(cfg)
        body = format_records(records, cfg.output_format, cfg.theorem_id)
        (out or sys.stdout).write(body)
    finally:
        if out is not None:
            out.close()
    summary = summarize(cfg.theorem_id, records)
    print(json.dumps({"summary": vars(summary)}), file=sys.stderr)
    return EXIT_FAILED if summary.unexpected_failures else EXIT_OK


def cmd_explore_powers(args: argparse.Namespace) -> int:
    _cap(args.p, args.max_p, "p")
    _cap(args.bound, args.max_n, "bound")
    return _emit_single(record_power_explorer(args.p, args.k, args.bound), _resolve_format(args.format))


COMMANDS = {
    "isprime": cmd_isprime,
    "binom-mod": cmd_binom_mod,
    "witness": cmd_witness,
    "check": cmd_check,
    "sweep": cmd_sweep,
    "explore-powers": cmd_explore_powers,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except (UsageError, DomainError, SizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
