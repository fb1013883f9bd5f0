"""Verification tasks: config parsing, execution, and report emission.

A config document is JSON with a `format_version` field and either one task
object or a `tasks` list.  Every task is internally pure (no shared mutable
state), so independent tasks in a batch may run concurrently; reports are
assembled in input order regardless.

Reports come in two formats.  `machine` is canonical JSON with sorted keys
and no volatile fields, so identical configs (and seeds) yield byte-identical
output.  `table` is a human-readable rendering of the same data plus timing.
Symbolic entries are always named α1, α2, ... in output, whatever the input
called them.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Any, Sequence

from .lfactors import (
    LFactor,
    SatakeParams,
    ext_sq_expansion,
    formal_ext_sq_L,
    standard_L,
)
from .polynomials import MultiPoly
from .series import (
    TruncSeries1,
    TruncSeries2,
    series2_first_difference,
    series_first_difference,
)
from .symmetric import doubled_shape, partitions_bounded, schur_eval_padded
from .torus_sums import (
    bf_odd_correction_probe,
    bf_series,
    js_even_series,
    js_odd_series,
)
from .weil_deligne import (
    FiniteAbelianGroup,
    WDBlock,
    WDRep,
    divisibility_check,
    prop_H_equality,
    random_k1_rep,
    random_wdrep,
)

FORMAT_VERSION = 1
DEFAULT_TRUNCATION = 6
DEFAULT_Q = 5
TRUNCATION_ENV_VAR = "EXTSQ_TRUNCATION"

TASK_NAMES = (
    "lfactor",
    "verify-js",
    "verify-bf",
    "verify-littlewood",
    "galois-divisibility",
    "galois-H",
    "bf-odd-probe",
)

_SATAKE_TASKS = {"lfactor", "verify-js", "verify-bf", "verify-littlewood", "bf-odd-probe"}
_GALOIS_TASKS = {"galois-divisibility", "galois-H"}
_WINDOW_TASKS = {"verify-bf", "bf-odd-probe"}


class ConfigError(ValueError):
    """A malformed config, with the location of the offending field."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


@dataclass
class TaskConfig:
    task: str
    echo: dict[str, Any]
    params: SatakeParams | None = None
    truncation: int | tuple[int, int] = DEFAULT_TRUNCATION
    rep: WDRep | None = None
    random_count: int | None = None
    seed: int = 0


@dataclass
class Report:
    task: dict[str, Any]
    verdict: str  # pass | fail | info | error
    summary: str
    data: dict[str, Any] = field(default_factory=dict)
    timing_ms: float = 0.0

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "info": 0, "fail": 1}.get(self.verdict, 2)


def _require(obj: dict, key: str, location: str) -> Any:
    if key not in obj:
        raise ConfigError(f"missing required field {key!r}", location)
    return obj[key]


def _parse_int(value: Any, what: str, location: str, minimum: int | None = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigError(f"{what} must be an integer", location)
    if minimum is not None and value < minimum:
        raise ConfigError(f"{what} must be >= {minimum}", location)
    return value


def _parse_satake(raw: Any, location: str) -> tuple[SatakeParams, list[str]]:
    if not isinstance(raw, list) or not raw:
        raise ConfigError("satake must be a nonempty list of entries", location)
    tokens: list[str] = []
    for i, tok in enumerate(raw):
        if isinstance(tok, str):
            tokens.append(tok.strip())
        elif isinstance(tok, int) and not isinstance(tok, bool):
            tokens.append(str(tok))
        else:
            raise ConfigError(
                "satake entries must be 'sym' or exact rationals", f"{location}[{i}]"
            )
    try:
        params = SatakeParams.parse(tokens)
    except ValueError as exc:
        raise ConfigError(str(exc), location) from exc
    return params, tokens


def _parse_truncation(raw: Any, location: str, want_window: bool) -> int | tuple[int, int]:
    if want_window:
        if isinstance(raw, int) and not isinstance(raw, bool):
            if raw < 0:
                raise ConfigError("truncation must be >= 0", location)
            return raw, raw
        if (
            isinstance(raw, list)
            and len(raw) == 2
            and all(isinstance(x, int) and not isinstance(x, bool) for x in raw)
        ):
            if min(raw) < 0:
                raise ConfigError("truncation orders must be >= 0", location)
            return raw[0], raw[1]
        raise ConfigError("truncation must be an int or a pair of ints", location)
    return _parse_int(raw, "truncation", location, minimum=0)


def _parse_blocks(raw: Any, group: FiniteAbelianGroup, location: str) -> list[WDBlock]:
    if not isinstance(raw, list) or not raw:
        raise ConfigError("blocks must be a nonempty list", location)
    blocks = []
    for i, b in enumerate(raw):
        loc = f"{location}[{i}]"
        if not isinstance(b, dict):
            raise ConfigError("each block must be an object", loc)
        grade = _require(b, "grade", loc)
        if not isinstance(grade, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in grade
        ):
            raise ConfigError("grade must be a list of integers", f"{loc}.grade")
        length = _parse_int(_require(b, "length", loc), "length", f"{loc}.length", 1)
        scalar_raw = _require(b, "scalar", loc)
        scalar: int | Fraction | str
        if isinstance(scalar_raw, int) and not isinstance(scalar_raw, bool):
            scalar = scalar_raw
        elif isinstance(scalar_raw, str):
            try:
                scalar = Fraction(scalar_raw.strip())
            except (ValueError, ZeroDivisionError):
                name = scalar_raw.strip()
                if not name or not name[0].isalpha():
                    raise ConfigError(
                        f"scalar {scalar_raw!r} is neither a rational nor a symbol name",
                        f"{loc}.scalar",
                    )
                scalar = name
        else:
            raise ConfigError("scalar must be an int, rational string, or symbol name", f"{loc}.scalar")
        try:
            blocks.append(WDBlock(group.reduce(grade), length, scalar))
        except ValueError as exc:
            raise ConfigError(str(exc), loc) from exc
    return blocks


def parse_task(obj: Any, default_truncation: int = DEFAULT_TRUNCATION, location: str = "task") -> TaskConfig:
    """Validate one raw task object into a TaskConfig (errors carry locations)."""
    if not isinstance(obj, dict):
        raise ConfigError("task must be an object", location)
    task = _require(obj, "task", location)
    if task not in TASK_NAMES:
        raise ConfigError(
            f"unknown task {task!r}; expected one of {', '.join(TASK_NAMES)}",
            f"{location}.task",
        )
    known = {"task", "satake", "n", "truncation", "seed", "q", "group", "blocks", "random"}
    for key in obj:
        if key not in known:
            raise ConfigError(f"unknown field {key!r}", f"{location}.{key}")
    seed = 0
    if "seed" in obj:
        seed = _parse_int(obj["seed"], "seed", f"{location}.seed")
    echo: dict[str, Any] = {"task": task, "seed": seed}

    cfg = TaskConfig(task=task, echo=echo, seed=seed)

    if task in _SATAKE_TASKS:
        params, tokens = _parse_satake(_require(obj, "satake", location), f"{location}.satake")
        if "n" in obj:
            n = _parse_int(obj["n"], "n", f"{location}.n", 1)
            if n != params.n:
                raise ConfigError(
                    f"n={n} does not match {params.n} satake entries", f"{location}.n"
                )
        if task == "verify-js":
            if params.n < 2:
                raise ConfigError("verify-js needs n >= 2", f"{location}.satake")
            if params.n % 2 and params.n < 3:
                raise ConfigError("verify-js needs n >= 2", f"{location}.satake")
        if task in ("verify-bf",) and params.n < 2:
            raise ConfigError("verify-bf needs n >= 2", f"{location}.satake")
        if task == "bf-odd-probe" and (params.n < 3 or params.n % 2 == 0):
            raise ConfigError("bf-odd-probe needs odd n >= 3", f"{location}.satake")
        cfg.params = params
        echo["satake"] = tokens
        raw_tr = obj.get("truncation", default_truncation)
        cfg.truncation = _parse_truncation(
            raw_tr, f"{location}.truncation", task in _WINDOW_TASKS
        )
        echo["truncation"] = (
            list(cfg.truncation) if isinstance(cfg.truncation, tuple) else cfg.truncation
        )
    else:
        q = obj.get("q", DEFAULT_Q)
        q = _parse_int(q, "q", f"{location}.q", 2)
        group_raw = obj.get("group", [1])
        if not isinstance(group_raw, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) and x >= 1 for x in group_raw
        ):
            raise ConfigError("group must be a list of positive cyclic orders", f"{location}.group")
        group = FiniteAbelianGroup(tuple(group_raw))
        echo["q"] = q
        echo["group"] = list(group.orders)
        if "random" in obj:
            rnd = obj["random"]
            if not isinstance(rnd, dict):
                raise ConfigError("random must be an object", f"{location}.random")
            count = _parse_int(_require(rnd, "count", f"{location}.random"), "count", f"{location}.random.count", 1)
            cfg.random_count = count
            echo["random"] = {"count": count}
        else:
            blocks = _parse_blocks(_require(obj, "blocks", location), group, f"{location}.blocks")
            try:
                cfg.rep = WDRep(q, group, blocks)
            except ValueError as exc:
                raise ConfigError(str(exc), f"{location}.blocks") from exc
            echo["blocks"] = [
                {
                    "grade": list(b.grade),
                    "length": b.length,
                    "scalar": str(b.scalar),
                }
                for b in cfg.rep.blocks
            ]
    return cfg


def parse_document(doc: Any, default_truncation: int = DEFAULT_TRUNCATION) -> list[TaskConfig]:
    """Parse a full config document (single task or batch)."""
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object", "document")
    version = _require(doc, "format_version", "document")
    if version != FORMAT_VERSION:
        raise ConfigError(
            f"unsupported format_version {version!r} (expected {FORMAT_VERSION})",
            "document.format_version",
        )
    if "tasks" in doc:
        raw_tasks = doc["tasks"]
        if not isinstance(raw_tasks, list) or not raw_tasks:
            raise ConfigError("tasks must be a nonempty list", "document.tasks")
        return [
            parse_task(t, default_truncation, f"tasks[{i}]") for i, t in enumerate(raw_tasks)
        ]
    body = {k: v for k, v in doc.items() if k != "format_version"}
    return [parse_task(body, default_truncation, "task")]


# -- execution ---------------------------------------------------------------


def _names(nvars: int) -> list[str]:
    return [f"α{i + 1}" for i in range(nvars)]


def _fmt_series1(s: TruncSeries1, names: Sequence[str]) -> list[str]:
    return [c.format(names) for c in s.coeffs]


def _fmt_series2(s: TruncSeries2, names: Sequence[str]) -> list[list[str]]:
    return [[c.format(names) for c in row] for row in s.coeffs]


def _fmt_tpoly(coeffs: Sequence[MultiPoly], names: Sequence[str]) -> str:
    return LFactor(list(coeffs)).format(names) if coeffs else "0"


def _contributions(
    params: SatakeParams, pairs: int, extra_zeros: int, order: int, names: Sequence[str]
) -> list[dict[str, Any]]:
    """Partition-indexed Schur coefficients behind a doubled-shape series."""
    rows = []
    for l in range(order + 1):
        for f in partitions_bounded(l, pairs):
            shape = doubled_shape(f, pairs, extra_zeros)
            coeff = schur_eval_padded(shape, params.entries)
            rows.append(
                {
                    "power": l,
                    "shape": list(shape),
                    "coefficient": coeff.format(names),
                }
            )
    return rows


def _product_series2(params: SatakeParams, l1: int, l2: int) -> TruncSeries2:
    """standard factor in t1 times exterior-square factor in t2."""
    return TruncSeries2.from_t1(standard_L(params).series(l1), l2) * TruncSeries2.from_t2(
        formal_ext_sq_L(params).series(l2), l1
    )


def _run_lfactor(cfg: TaskConfig) -> Report:
    params = cfg.params
    order = cfg.truncation
    names = _names(params.nvars)
    std = standard_L(params)
    ext = formal_ext_sq_L(params)
    data = {
        "standard_reciprocal": _fmt_tpoly(std.reciprocal, names),
        "ext_sq_reciprocal": _fmt_tpoly(ext.reciprocal, names),
        "standard_series": _fmt_series1(std.series(order), names),
        "ext_sq_series": _fmt_series1(ext.series(order), names),
    }
    return Report(
        task=cfg.echo,
        verdict="info",
        summary=f"standard and exterior-square factors expanded through t^{order}",
        data=data,
    )


def _run_verify_littlewood(cfg: TaskConfig) -> Report:
    params = cfg.params
    order = cfg.truncation
    names = _names(params.nvars)
    lhs = ext_sq_expansion(params, order)
    rhs = formal_ext_sq_L(params).series(order)
    diff = series_first_difference(lhs, rhs)
    k = len(params.nonzero_entries)
    data = {
        "k": k,
        "expansion": _fmt_series1(lhs, names),
        "product": _fmt_series1(rhs, names),
        "first_difference": None
        if diff is None
        else {"power": diff[0], "expansion": diff[1].format(names), "product": diff[2].format(names)},
        "contributions": _contributions(
            SatakeParams(params.nonzero_entries, nvars=params.nvars),
            k // 2,
            k % 2,
            order,
            names,
        ),
    }
    if diff is None:
        return Report(
            cfg.echo,
            "pass",
            f"doubled-shape expansion matches the exterior-square factor through t^{order}",
            data,
        )
    return Report(
        cfg.echo,
        "fail",
        f"expansion differs from the exterior-square factor at t^{diff[0]}",
        data,
    )


def _run_verify_js(cfg: TaskConfig) -> Report:
    params = cfg.params
    order = cfg.truncation
    names = _names(params.nvars)
    n = params.n
    even = n % 2 == 0
    lhs = js_even_series(params, order) if even else js_odd_series(params, order)
    rhs = formal_ext_sq_L(params).series(order)
    diff = series_first_difference(lhs, rhs)
    m = n // 2 if even else (n - 1) // 2
    data = {
        "parity": "even" if even else "odd",
        "positive_conductor": params.has_zero,
        "torus_sum": _fmt_series1(lhs, names),
        "product": _fmt_series1(rhs, names),
        "first_difference": None
        if diff is None
        else {"power": diff[0], "torus_sum": diff[1].format(names), "product": diff[2].format(names)},
        "contributions": _contributions(
            params, m - 1 if even else m, 2 if even else 1, order, names
        ),
    }
    if even and not params.has_zero:
        note = (
            "identity not asserted: even rank with every entry nonzero "
            "(conductor hypothesis fails); series reported for inspection"
        )
        return Report(cfg.echo, "info", note, data)
    if diff is None:
        return Report(
            cfg.echo,
            "pass",
            f"torus sum equals the exterior-square factor through t^{order}",
            data,
        )
    return Report(
        cfg.echo,
        "fail",
        f"torus sum differs from the exterior-square factor at t^{diff[0]}",
        data,
    )


def _run_verify_bf(cfg: TaskConfig) -> Report:
    params = cfg.params
    l1, l2 = cfg.truncation
    names = _names(params.nvars)
    n = params.n
    lhs = bf_series(params, l1, l2)
    if n % 2 == 0:
        m = n // 2
        omega = reduce(lambda a, b: a * b, params.entries)
        product = _product_series2(params, l1, l2)
        correction_grid = [
            [MultiPoly.zero(params.nvars) for _ in range(l2 + 1)] for _ in range(l1 + 1)
        ]
        correction_grid[0][0] = MultiPoly.one(params.nvars)
        if m <= l2:
            correction_grid[0][m] = -omega
        expected = TruncSeries2(params.nvars, correction_grid) * product
        diff = series2_first_difference(lhs, expected)
        data = {
            "parity": "even",
            "central_product": omega.format(names),
            "torus_sum": _fmt_series2(lhs, names),
            "expected": _fmt_series2(expected, names),
            "first_difference": None
            if diff is None
            else {
                "t1_power": diff[0][0],
                "t2_power": diff[0][1],
                "torus_sum": diff[1].format(names),
                "expected": diff[2].format(names),
            },
        }
        if diff is None:
            return Report(
                cfg.echo,
                "pass",
                f"two-variable torus sum matches (1 - ω t2^{m}) times the product "
                f"of factors through ({l1}, {l2})",
                data,
            )
        return Report(
            cfg.echo,
            "fail",
            f"two-variable torus sum differs from its product form at t1^{diff[0][0]} t2^{diff[0][1]}",
            data,
        )
    # odd rank
    if not params.has_zero:
        data = {
            "parity": "odd",
            "positive_conductor": False,
            "torus_sum": _fmt_series2(lhs, names),
        }
        return Report(
            cfg.echo,
            "info",
            "identity not asserted: odd rank with every entry nonzero has no "
            "closed product form here; run bf-odd-probe for the empirical correction",
            data,
        )
    expected = _product_series2(params, l1, l2)
    diff = series2_first_difference(lhs, expected)
    data = {
        "parity": "odd",
        "positive_conductor": True,
        "torus_sum": _fmt_series2(lhs, names),
        "expected": _fmt_series2(expected, names),
        "first_difference": None
        if diff is None
        else {
            "t1_power": diff[0][0],
            "t2_power": diff[0][1],
            "torus_sum": diff[1].format(names),
            "expected": diff[2].format(names),
        },
    }
    if diff is None:
        return Report(
            cfg.echo,
            "pass",
            f"two-variable torus sum matches the product of factors through ({l1}, {l2})",
            data,
        )
    return Report(
        cfg.echo,
        "fail",
        f"two-variable torus sum differs from its product form at t1^{diff[0][0]} t2^{diff[0][1]}",
        data,
    )


def _run_bf_odd_probe(cfg: TaskConfig) -> Report:
    params = cfg.params
    l1, l2 = cfg.truncation
    names = _names(params.nvars)
    try:
        probe = bf_odd_correction_probe(params, l1, l2)
    except ArithmeticError as exc:
        return Report(cfg.echo, "fail", str(exc), {"conductor_hypothesis": True})
    data = {
        "conductor_hypothesis": probe.conductor_hypothesis,
        "matches_product": probe.matches_product,
        "correction": _fmt_series2(probe.correction, names),
    }
    if probe.conductor_hypothesis:
        return Report(
            cfg.echo,
            "pass",
            f"correction factor is exactly 1 through ({l1}, {l2})",
            data,
        )
    return Report(
        cfg.echo,
        "info",
        "no identity asserted for all-nonzero odd rank; empirical correction reported",
        data,
    )


def _describe_rep(rep: WDRep) -> dict[str, Any]:
    return {
        "q": rep.q,
        "group": list(rep.group.orders),
        "blocks": [
            {"grade": list(b.grade), "length": b.length, "scalar": str(b.scalar)}
            for b in rep.blocks
        ],
    }


def _run_galois_divisibility(cfg: TaskConfig) -> Report:
    if cfg.random_count is None:
        rep = cfg.rep
        names = _names(rep.nvars)
        verdict = divisibility_check(rep)
        data = {
            "formal_reciprocal": _fmt_tpoly(verdict.formal_factor.reciprocal, names),
            "ext_sq_reciprocal": _fmt_tpoly(verdict.ext_sq_factor.reciprocal, names),
            "divides": verdict.divides,
            "strict": verdict.strict,
            "quotient": None
            if verdict.quotient is None
            else _fmt_tpoly(verdict.quotient, names),
        }
        if verdict.divides:
            kind = "strictly" if verdict.strict else "with quotient 1"
            return Report(
                cfg.echo, "pass", f"pair-product factor divides the exterior-square factor {kind}", data
            )
        return Report(
            cfg.echo, "fail", "pair-product factor does not divide the exterior-square factor", data
        )
    rng = random.Random(cfg.seed)
    failures: list[dict[str, Any]] = []
    strict_count = 0
    for i in range(cfg.random_count):
        rep = random_wdrep(rng)
        verdict = divisibility_check(rep)
        if not verdict.divides:
            failures.append({"index": i, "rep": _describe_rep(rep)})
        elif verdict.strict:
            strict_count += 1
    data = {
        "count": cfg.random_count,
        "all_divide": not failures,
        "strict_count": strict_count,
        "failures": failures,
    }
    if not failures:
        return Report(
            cfg.echo,
            "pass",
            f"divisibility holds on all {cfg.random_count} random representations "
            f"({strict_count} strict)",
            data,
        )
    return Report(
        cfg.echo,
        "fail",
        f"divisibility failed on {len(failures)} of {cfg.random_count} random representations",
        data,
    )


def _run_galois_h(cfg: TaskConfig) -> Report:
    if cfg.random_count is None:
        rep = cfg.rep
        names = _names(rep.nvars)
        result = prop_H_equality(rep)
        data = {
            "formal_reciprocal": _fmt_tpoly(result.formal_factor.reciprocal, names),
            "ext_sq_reciprocal": _fmt_tpoly(result.ext_sq_factor.reciprocal, names),
            "equal": result.equal,
        }
        if result.equal:
            return Report(
                cfg.echo, "pass", "factors agree exactly under the pairing hypothesis", data
            )
        return Report(cfg.echo, "fail", "factors differ despite the pairing hypothesis", data)
    rng = random.Random(cfg.seed)
    failures = []
    for i in range(cfg.random_count):
        rep = random_k1_rep(rng, require_hypothesis=True)
        result = prop_H_equality(rep)
        if not result.equal:
            failures.append({"index": i, "rep": _describe_rep(rep)})
    data = {
        "count": cfg.random_count,
        "all_equal": not failures,
        "failures": failures,
    }
    if not failures:
        return Report(
            cfg.echo,
            "pass",
            f"equality holds on all {cfg.random_count} random semisimple representations",
            data,
        )
    return Report(
        cfg.echo,
        "fail",
        f"equality failed on {len(failures)} of {cfg.random_count} representations",
        data,
    )


_RUNNERS = {
    "lfactor": _run_lfactor,
    "verify-littlewood": _run_verify_littlewood,
    "verify-js": _run_verify_js,
    "verify-bf": _run_verify_bf,
    "bf-odd-probe": _run_bf_odd_probe,
    "galois-divisibility": _run_galois_divisibility,
    "galois-H": _run_galois_h,
}


def run_task(cfg: TaskConfig) -> Report:
    """Execute one task; module precondition violations become error reports."""
    start = time.perf_counter()
    try:
        report = _RUNNERS[cfg.task](cfg)
    except ValueError as exc:
        report = Report(cfg.echo, "error", f"precondition violated: {exc}")
    report.timing_ms = (time.perf_counter() - start) * 1000.0
    return report


def run_all(configs: Sequence[TaskConfig]) -> list[Report]:
    return [run_task(cfg) for cfg in configs]


# -- emission -----------------------------------------------------------------


def emit_machine(reports: Sequence[Report]) -> str:
    """Canonical JSON for a report list; no volatile fields, sorted keys."""
    doc = {
        "format_version": FORMAT_VERSION,
        "reports": [
            {
                "task": r.task,
                "verdict": r.verdict,
                "summary": r.summary,
                "data": r.data,
            }
            for r in reports
        ],
    }
    return json.dumps(doc, sort_keys=True, ensure_ascii=True, separators=(",", ": "), indent=1) + "\n"


def _table_rows(data: Any, indent: str = "  ") -> list[str]:
    rows: list[str] = []
    if isinstance(data, dict):
        for key in data:
            value = data[key]
            if isinstance(value, (dict, list)):
                rows.append(f"{indent}{key}:")
                rows.extend(_table_rows(value, indent + "  "))
            else:
                rows.append(f"{indent}{key}: {value}")
    elif isinstance(data, list):
        scalar = all(not isinstance(v, (dict, list)) for v in data)
        if scalar:
            for i, v in enumerate(data):
                rows.append(f"{indent}[{i}] {v}")
        else:
            for i, v in enumerate(data):
                rows.append(f"{indent}[{i}]")
                rows.extend(_table_rows(v, indent + "  "))
    else:
        rows.append(f"{indent}{data}")
    return rows


def emit_table(reports: Sequence[Report]) -> str:
    lines: list[str] = []
    for r in reports:
        lines.append(f"== {r.task.get('task', '?')} ==")
        lines.append(f"verdict: {r.verdict}")
        lines.append(f"summary: {r.summary}")
        lines.append(f"config:  {json.dumps(r.task, sort_keys=True, ensure_ascii=True)}")
        if r.data:
            lines.extend(_table_rows(r.data))
        lines.append(f"timing:  {r.timing_ms:.1f} ms")
        lines.append("")
    return "\n".join(lines)


def exit_code(reports: Sequence[Report]) -> int:
    return max((r.exit_code for r in reports), default=0)
