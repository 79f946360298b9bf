"""Grid sweeps over theorem parameters, optionally sharded across processes."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .arith import is_prime_trial
from .errors import DomainError, HypothesisError, SizeError
from .oracle import build_pascal_mod, oracle_binom_mod
from .report import SCHEMAS, SWEEPABLE, ReportRecord, build_record, expected_failure

DEFAULT_MAX_P = 10**12
DEFAULT_MAX_N = 10**6
DEFAULT_MAX_INSTANCES = 10**6

# parameters that bound a search size rather than name a prime
_SIZE_PARAMS = {"n", "m", "r", "N", "R", "bound", "k", "alpha"}
_DEFAULT_VALUES = {"mestrovic": {"bound": (50,)}, "power_explorer": {"bound": (6,)}}


def parse_int_set(text: str) -> tuple[int, ...]:
    """Parse ``"5"``, ``"2:13"`` (inclusive) or comma lists of either."""
    values: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            lo_s, hi_s = part.split(":", 1)
            lo, hi = int(lo_s), int(hi_s)
            if lo > hi:
                raise ValueError(f"empty range {part!r}")
            if hi - lo > DEFAULT_MAX_INSTANCES:
                raise SizeError(f"range {part!r} has more than {DEFAULT_MAX_INSTANCES} values")
            values.update(range(lo, hi + 1))
        else:
            values.add(int(part))
    if not values:
        raise ValueError(f"no values in {text!r}")
    if min(values) < 0:
        raise DomainError(f"negative value in {text!r}")
    return tuple(sorted(values))


@dataclass(frozen=True)
class Caps:
    max_p: int = DEFAULT_MAX_P
    max_n: int = DEFAULT_MAX_N
    max_rows: int = 20000
    max_instances: int = DEFAULT_MAX_INSTANCES


@dataclass
class SweepConfig:
    theorem_id: str
    ranges: dict[str, tuple[int, ...]]
    output_format: str = "json-lines"
    output_path: str | None = None
    worker_count: int = 1
    primes_only: bool = False
    engine: str = "direct"
    caps: Caps = field(default_factory=Caps)


@dataclass
class SweepSummary:
    theorem_id: str
    checked: int = 0
    held: int = 0
    failed: int = 0
    expected_failures: int = 0
    unexpected_failures: int = 0

    def add(self, rec: ReportRecord) -> None:
        self.checked += 1
        if rec.holds:
            self.held += 1
            return
        self.failed += 1
        if expected_failure(rec):
            self.expected_failures += 1
        else:
            self.unexpected_failures += 1


def _values(cfg: SweepConfig, name: str) -> tuple[int, ...]:
    if name in cfg.ranges:
        return cfg.ranges[name]
    default = _DEFAULT_VALUES.get(cfg.theorem_id, {}).get(name)
    if default is None:
        raise DomainError(f"sweep {cfg.theorem_id} requires --{name}")
    return default


def build_grid(cfg: SweepConfig) -> list[dict[str, int]]:
    """Validate a config and expand it into parameter dicts in canonical order."""
    tid = cfg.theorem_id
    if tid not in SWEEPABLE:
        raise DomainError(f"cannot sweep {tid!r}; choose from {', '.join(SWEEPABLE)}")
    if cfg.engine not in ("direct", "oracle"):
        raise DomainError(f"unknown engine {cfg.engine!r}")
    if cfg.engine == "oracle" and tid != "thm21":
        raise DomainError("the oracle engine is only available for thm21")
    if cfg.worker_count < 1:
        raise DomainError("worker count must be positive")
    names = SCHEMAS[tid].params
    unknown = set(cfg.ranges) - set(names)
    if unknown:
        raise DomainError(f"sweep {tid} does not take {', '.join(sorted(unknown))}")
    axes = {name: _values(cfg, name) for name in names}

    for name, vals in axes.items():
        cap = cfg.caps.max_p if name in ("p", "d", "q") else cfg.caps.max_n
        if max(vals) > cap:
            raise SizeError(f"{name}={max(vals)} exceeds cap {cap}")

    if "p" in axes:
        ps = axes["p"]
        if cfg.primes_only:
            ps = tuple(p for p in ps if is_prime_trial(p))
            if not ps:
                raise DomainError("no primes in the p range")
        if tid == "thm21":
            if min(ps) < 2:
                raise DomainError("thm21 requires p > 1")
        elif tid in ("bailey_np_rp", "bailey_digits"):
            bad = [p for p in ps if p < 5 or not is_prime_trial(p)]
            if bad:
                raise HypothesisError(f"{tid} requires p >= 5 prime; rejected p={bad[0]}")
        else:
            bad = [p for p in ps if not is_prime_trial(p)]
            if bad:
                raise DomainError(f"{tid} requires prime p; rejected p={bad[0]}")
        axes["p"] = ps
    if tid == "mestrovic" and min(min(axes["d"]), min(axes["q"])) < 2:
        raise DomainError("mestrovic requires d > 1 and q > 1")
    if tid == "apostol" and min(axes["alpha"]) < 1:
        raise DomainError("apostol requires alpha >= 1 (a positive integer)")
    if tid == "power_explorer":
        if min(axes["k"]) < 1:
            raise DomainError("power_explorer requires k >= 1")
        if min(axes["bound"]) < 2:
            raise DomainError("power_explorer requires bound >= 2")

    total = 1
    for vals in axes.values():
        total *= len(vals)
    if total > cfg.caps.max_instances:
        raise SizeError(f"grid of {total} instances exceeds cap {cfg.caps.max_instances}")

    grid = []
    for combo in itertools.product(*(axes[n] for n in names)):
        params = dict(zip(names, combo))
        if tid == "lucas_corollary" and params["m"] > params["n"]:
            continue
        if tid == "bailey_digits" and (params["n"] >= params["p"] or params["r"] >= params["p"]):
            continue
        grid.append(params)
    if cfg.engine == "oracle" and max(axes["n"]) > cfg.caps.max_rows:
        raise SizeError(f"n={max(axes['n'])} exceeds triangle cap {cfg.caps.max_rows}")
    return grid


def _run_direct(task: tuple[str, list[dict[str, int]]]) -> list[ReportRecord]:
    tid, chunk = task
    return [build_record(tid, params) for params in chunk]


def _run_oracle_thm21(task: tuple[int, list[int], int]) -> list[ReportRecord]:
    p, ns, max_rows = task
    tri = build_pascal_mod(p, max(ns), max_rows=max_rows)
    prime = is_prime_trial(p)
    out = []
    for n in ns:
        lhs = oracle_binom_mod(tri, n, p)
        rhs = (n // p) % p
        out.append(ReportRecord("thm21", {"p": p, "n": n}, lhs, rhs, p, lhs == rhs, {"p_is_prime": prime}))
    return out


def _tasks(cfg: SweepConfig, grid: list[dict[str, int]]) -> tuple[object, list]:
    if cfg.engine == "oracle":
        by_p: dict[int, list[int]] = {}
        for params in grid:
            by_p.setdefault(params["p"], []).append(params["n"])
        return _run_oracle_thm21, [(p, ns, cfg.caps.max_rows) for p, ns in by_p.items()]
    size = max(1, len(grid) // (cfg.worker_count * 8) or 1)
    chunks = [grid[i : i + size] for i in range(0, len(grid), size)]
    return _run_direct, [(cfg.theorem_id, c) for c in chunks]


def run_sweep(cfg: SweepConfig) -> list[ReportRecord]:
    """Evaluate every grid point; output order never depends on ``worker_count``."""
    grid = build_grid(cfg)
    fn, tasks = _tasks(cfg, grid)
    if cfg.worker_count == 1 or len(tasks) <= 1:
        batches = [fn(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.worker_count) as pool:
            batches = list(pool.map(fn, tasks))
    records = [rec for batch in batches for rec in batch]
    records.sort(key=ReportRecord.sort_key)
    return records


def summarize(theorem_id: str, records: list[ReportRecord]) -> SweepSummary:
    summary = SweepSummary(theorem_id)
    for rec in records:
        summary.add(rec)
    return summary


def read_config_file(path: str | Path) -> dict[str, str]:
    """Flat ``key = value`` (or ``key: value``) lines; ``#`` starts a comment."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for sep in ("=", ":"):
            if sep in line:
                key, value = line.split(sep, 1)
                break
        else:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        out[key.strip().replace("-", "_")] = value.strip()
    return out
