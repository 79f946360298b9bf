"""Report records: per-theorem schemas, record builders, JSON-lines and CSV codecs.

Every integer is written as a decimal string so consumers never lose width;
booleans stay JSON booleans (``true``/``false`` in CSV) and absent values are
``null`` (empty in CSV).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Iterable

from .arith import binom_exact, is_prime_trial, smallest_prime_factor
from .characterization import WitnessReport, check_thm21, composite_witness, is_prime_by_characterization
from .congruences import (
    check_apostol,
    check_bailey_digits,
    check_bailey_np_rp,
    check_lucas_corollary,
    explore_power_congruence,
    mestrovic_falsify,
)
from .lucas import binom_mod_prime_lucas

FORMATS = ("json-lines", "csv")

_WITNESS_EXTRA = (
    ("witness_n", "int"),
    ("q", "int"),
    ("x", "int"),
    ("k", "int"),
    ("binom_residue_mod_qx", "int"),
    ("predicted_residue_mod_qx", "int"),
    ("floor_residue_mod_qx", "int"),
)


@dataclass(frozen=True)
class Schema:
    params: tuple[str, ...]
    extra: tuple[tuple[str, str], ...] = ()

    @property
    def extra_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.extra)


SCHEMAS: dict[str, Schema] = {
    "thm21": Schema(("p", "n"), (("p_is_prime", "bool"),)),
    "lucas_corollary": Schema(("p", "n", "m")),
    "bailey_np_rp": Schema(("p", "n", "r")),
    "bailey_digits": Schema(("p", "N", "R", "n", "r")),
    "apostol": Schema(("p", "alpha", "n"), (("applicable", "bool"),)),
    "mestrovic": Schema(
        ("d", "q", "bound"),
        (
            ("counterexample_n", "int"),
            ("counterexample_m", "int"),
            ("checks_performed", "int"),
            ("lucas_protected", "bool"),
        ),
    ),
    "power_explorer": Schema(
        ("p", "k", "bound"),
        (("max_l", "int"), ("guaranteed_l", "int"), ("tightness_n", "int"), ("tightness_m", "int")),
    ),
    "binom_mod": Schema(("n", "k", "p")),
    "isprime": Schema(("p",), (("verdict", "str"), ("verified_n_max", "int"), *_WITNESS_EXTRA)),
    "witness": Schema(("p",), _WITNESS_EXTRA),
}

SWEEPABLE = ("thm21", "lucas_corollary", "bailey_np_rp", "bailey_digits", "apostol", "mestrovic", "power_explorer")


def canonical_theorem_id(name: str) -> str:
    tid = name.strip().lower().replace("-", "_")
    if tid not in SCHEMAS:
        raise ValueError(f"unknown theorem id {name!r}; choose from {', '.join(SWEEPABLE)}")
    return tid


@dataclass(frozen=True)
class ReportRecord:
    theorem_id: str
    params: dict[str, int]
    lhs_residue: int | None
    rhs_residue: int | None
    modulus: int
    holds: bool
    extra: dict[str, Any] = field(default_factory=dict)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(self.params[name] for name in SCHEMAS[self.theorem_id].params)


def _enc(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    return value


def _dec(value: Any, kind: str) -> Any:
    if value is None:
        return None
    if kind == "int":
        return int(value)
    if kind == "bool":
        return bool(value)
    return value


def to_json_obj(rec: ReportRecord) -> dict[str, Any]:
    schema = SCHEMAS[rec.theorem_id]
    return {
        "theorem_id": rec.theorem_id,
        "params": {name: _enc(rec.params[name]) for name in schema.params},
        "lhs_residue": _enc(rec.lhs_residue),
        "rhs_residue": _enc(rec.rhs_residue),
        "modulus": _enc(rec.modulus),
        "holds": rec.holds,
        "extra": {name: _enc(rec.extra.get(name)) for name in schema.extra_names},
    }


def to_json_line(rec: ReportRecord) -> str:
    return json.dumps(to_json_obj(rec), separators=(",", ":"))


def from_json_line(line: str) -> ReportRecord:
    obj = json.loads(line)
    schema = SCHEMAS[obj["theorem_id"]]
    return ReportRecord(
        theorem_id=obj["theorem_id"],
        params={name: int(obj["params"][name]) for name in schema.params},
        lhs_residue=_dec(obj["lhs_residue"], "int"),
        rhs_residue=_dec(obj["rhs_residue"], "int"),
        modulus=int(obj["modulus"]),
        holds=bool(obj["holds"]),
        extra={name: _dec(obj["extra"].get(name), kind) for name, kind in schema.extra},
    )


def csv_header(theorem_id: str) -> list[str]:
    schema = SCHEMAS[theorem_id]
    return ["theorem_id", *schema.params, "lhs_residue", "rhs_residue", "modulus", "holds", *schema.extra_names]


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def csv_row(rec: ReportRecord) -> list[str]:
    schema = SCHEMAS[rec.theorem_id]
    cells = [rec.theorem_id, *(rec.params[n] for n in schema.params)]
    cells += [rec.lhs_residue, rec.rhs_residue, rec.modulus, rec.holds]
    cells += [rec.extra.get(n) for n in schema.extra_names]
    return [_csv_cell(c) for c in cells]


def format_records(records: Iterable[ReportRecord], fmt: str, theorem_id: str) -> str:
    """Render a homogeneous batch of records as one report body."""
    if fmt == "json-lines":
        return "".join(to_json_line(r) + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_header(theorem_id))
        for r in records:
            writer.writerow(csv_row(r))
        return buf.getvalue()
    raise ValueError(f"unknown output format {fmt!r}; choose from {', '.join(FORMATS)}")


def parse_csv(text: str) -> list[ReportRecord]:
    reader = csv.DictReader(io.StringIO(text))
    out = []
    for row in reader:
        schema = SCHEMAS[row["theorem_id"]]

        def cell(v: str, kind: str) -> Any:
            if v == "":
                return None
            if kind == "bool":
                return v == "true"
            return int(v) if kind == "int" else v

        out.append(
            ReportRecord(
                theorem_id=row["theorem_id"],
                params={n: int(row[n]) for n in schema.params},
                lhs_residue=cell(row["lhs_residue"], "int"),
                rhs_residue=cell(row["rhs_residue"], "int"),
                modulus=int(row["modulus"]),
                holds=row["holds"] == "true",
                extra={n: cell(row[n], kind) for n, kind in schema.extra},
            )
        )
    return out


def is_power_of(d: int, q: int) -> bool:
    while d % q == 0:
        d //= q
    return d == 1


def expected_failure(rec: ReportRecord) -> bool:
    """A failed record that the mathematics predicts, as opposed to a bug."""
    if rec.holds:
        return False
    if rec.theorem_id == "thm21":
        return not rec.extra["p_is_prime"]
    if rec.theorem_id == "mestrovic":
        return not rec.extra["lucas_protected"]
    if rec.theorem_id in ("isprime", "witness"):
        return True
    return False


# -- record builders ---------------------------------------------------------


def record_thm21(p: int, n: int) -> ReportRecord:
    chk = check_thm21(n, p)
    return ReportRecord(
        "thm21", {"p": p, "n": n}, chk.lhs_residue, chk.rhs_residue, p, chk.holds,
        {"p_is_prime": is_prime_trial(p)},
    )


def record_lucas_corollary(p: int, n: int, m: int) -> ReportRecord:
    chk = check_lucas_corollary(n, m, p, strict=False)
    return ReportRecord("lucas_corollary", {"p": p, "n": n, "m": m}, chk.lhs_residue, chk.rhs_residue, p, chk.holds)


def record_bailey_np_rp(p: int, n: int, r: int) -> ReportRecord:
    chk = check_bailey_np_rp(n, r, p, strict=False)
    return ReportRecord(
        "bailey_np_rp", {"p": p, "n": n, "r": r}, chk.lhs_residue, chk.rhs_residue, chk.modulus, chk.holds
    )


def record_bailey_digits(p: int, N: int, R: int, n: int, r: int) -> ReportRecord:
    chk = check_bailey_digits(N, R, n, r, p, strict=False)
    return ReportRecord(
        "bailey_digits",
        {"p": p, "N": N, "R": R, "n": n, "r": r},
        chk.lhs_residue,
        chk.rhs_residue,
        chk.modulus,
        chk.holds,
    )


def record_apostol(p: int, alpha: int, n: int) -> ReportRecord:
    res = check_apostol(n, p, alpha, strict=False)
    holds = res.verdict is not False
    return ReportRecord(
        "apostol", {"p": p, "alpha": alpha, "n": n}, res.binom_residue, 0, res.modulus, holds,
        {"applicable": res.applicable},
    )


def record_mestrovic(d: int, q: int, bound: int) -> ReportRecord:
    res = mestrovic_falsify(d, q, bound)
    lhs = rhs = cn = cm = None
    if res.counterexample is not None:
        cn, cm = res.counterexample
        lhs = binom_exact(cn * d, cm * d) % q
        rhs = binom_exact(cn, cm) % q
    protected = smallest_prime_factor(q) == q and is_power_of(d, q)
    return ReportRecord(
        "mestrovic",
        {"d": d, "q": q, "bound": bound},
        lhs,
        rhs,
        q,
        not res.found,
        {
            "counterexample_n": cn,
            "counterexample_m": cm,
            "checks_performed": res.checks_performed,
            "lucas_protected": protected,
        },
    )


def record_power_explorer(p: int, k: int, bound: int) -> ReportRecord:
    rep = explore_power_congruence(p, k, bound)
    # Lucas corollary gives l >= 1 for every prime; Bailey gives l >= 3 for p >= 5
    guaranteed = 3 if p >= 5 else 1
    n, m = rep.tightness_example
    mod = p**rep.max_l
    scale = p**k
    return ReportRecord(
        "power_explorer",
        {"p": p, "k": k, "bound": bound},
        binom_exact(n * scale, m * scale) % mod,
        binom_exact(n, m) % mod,
        mod,
        rep.max_l >= guaranteed,
        {"max_l": rep.max_l, "guaranteed_l": guaranteed, "tightness_n": n, "tightness_m": m},
    )


def record_binom_mod(n: int, k: int, p: int) -> ReportRecord:
    lucas = binom_mod_prime_lucas(n, k, p)
    exact = binom_exact(n, k) % p
    return ReportRecord("binom_mod", {"n": n, "k": k, "p": p}, lucas, exact, p, lucas == exact)


def _witness_extra(w: WitnessReport | None) -> dict[str, Any]:
    if w is None:
        return {name: None for name, _ in _WITNESS_EXTRA}
    return {
        "witness_n": w.witness_n,
        "q": w.split.q,
        "x": w.split.x,
        "k": w.split.k,
        "binom_residue_mod_qx": w.binom_residue_mod_qx,
        "predicted_residue_mod_qx": w.predicted_residue_mod_qx,
        "floor_residue_mod_qx": w.floor_residue_mod_qx,
    }


def record_isprime(p: int, n_max: int | None = None) -> ReportRecord:
    res = is_prime_by_characterization(p, n_max)
    if res.verdict:
        return ReportRecord(
            "isprime", {"p": p}, None, None, p, True,
            {"verdict": "prime", "verified_n_max": res.verified_n_max, **_witness_extra(None)},
        )
    w = res.witness
    assert w is not None
    return ReportRecord(
        "isprime",
        {"p": p},
        w.check_mod_p.lhs_residue,
        w.check_mod_p.rhs_residue,
        p,
        False,
        {"verdict": "composite", "verified_n_max": None, **_witness_extra(w)},
    )


def record_witness(p: int) -> ReportRecord:
    w = composite_witness(p)
    return ReportRecord(
        "witness", {"p": p}, w.check_mod_p.lhs_residue, w.check_mod_p.rhs_residue, p, w.check_mod_p.holds,
        _witness_extra(w),
    )


BUILDERS = {
    "thm21": record_thm21,
    "lucas_corollary": record_lucas_corollary,
    "bailey_np_rp": record_bailey_np_rp,
    "bailey_digits": record_bailey_digits,
    "apostol": record_apostol,
    "mestrovic": record_mestrovic,
    "power_explorer": record_power_explorer,
}


def build_record(theorem_id: str, params: dict[str, int]) -> ReportRecord:
    return BUILDERS[theorem_id](**params)
