"""Parameter sweeps over the generator grid, one CSV row per solve."""
from __future__ import annotations

import csv
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields, replace
from pathlib import Path

import numpy as np

from .datagen import GenParams, generate
from .errors import ParameterError
from .metrics import CSV_FIELDS
from .solvers import SOLVERS, solve, solver_name

SWEEP_FIELDS = ("axis", "value", "rep") + CSV_FIELDS
AXES = tuple(f.name for f in fields(GenParams) if f.name != "seed")
TUPLE_FIELDS = ("xi_range", "competing_range")


@dataclass(frozen=True)
class SweepConfig:
    base: GenParams
    axis: str
    values: tuple
    solvers: tuple[str, ...] = tuple(SOLVERS)
    repetitions: int = 1
    seed: int = 0
    record_time: bool = True

    def __post_init__(self):
        if self.axis not in AXES:
            raise ParameterError(f"axis must be one of {', '.join(AXES)}; got {self.axis!r}")
        if not self.values:
            raise ParameterError("values must not be empty")
        if int(self.repetitions) != self.repetitions or self.repetitions < 1:
            raise ParameterError("repetitions must be a positive integer")
        object.__setattr__(self, "solvers", tuple(solver_name(s) for s in self.solvers))

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        known = {"base", "axis", "values", "solvers", "repetitions", "seed", "record_time"}
        extra = set(d) - known
        if extra:
            raise ParameterError(f"unknown sweep config keys: {sorted(extra)}")
        if "axis" not in d or "values" not in d:
            raise ParameterError("sweep config needs 'axis' and 'values'")
        base = dict(d.get("base", {}))
        bad = set(base) - set(AXES)
        if bad:
            raise ParameterError(f"unknown generator parameters: {sorted(bad)}")
        for name in TUPLE_FIELDS:
            if base.get(name) is not None:
                base[name] = tuple(base[name])
        values = tuple(tuple(v) if isinstance(v, list) else v for v in d["values"])
        return cls(
            base=GenParams(**base), axis=d["axis"], values=values,
            solvers=tuple(d.get("solvers", SOLVERS)),
            repetitions=d.get("repetitions", 1), seed=d.get("seed", 0),
            record_time=bool(d.get("record_time", True)),
        )

    @classmethod
    def load(cls, path) -> "SweepConfig":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ParameterError(f"cannot read sweep config: {exc}") from exc
        if not isinstance(data, dict):
            raise ParameterError("sweep config must be a JSON object")
        try:
            return cls.from_dict(data)
        except TypeError as exc:
            raise ParameterError(str(exc)) from exc

    def cells(self):
        """(value, rep, params) in output order.

        A repetition uses the same seed for every axis value, so values are
        compared on paired draws.
        """
        for value in self.values:
            for rep in range(self.repetitions):
                seed = int(np.random.SeedSequence([self.seed, rep]).generate_state(1)[0])
                params = replace(self.base, **{self.axis: value}, seed=seed)
                params.validate()
                yield value, rep, params


def _fmt(value):
    return "x".join(map(str, value)) if isinstance(value, tuple) else value


def _run_cell(config, value, rep, params):
    inst = generate(params)
    rows = []
    for name in config.solvers:
        _, report = solve(inst, name, seed=params.seed)
        row = {"axis": config.axis, "value": _fmt(value), "rep": rep}
        row.update(report.as_row(timed=config.record_time))
        rows.append(row)
    return rows


def thread_count() -> int:
    env = os.environ.get("SES_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ParameterError(f"SES_THREADS must be an integer, got {env!r}") from None
        return max(1, n)
    return os.cpu_count() or 1


def run_sweep(config: SweepConfig, threads: int | None = None) -> list[dict]:
    """Run every (value, repetition) cell; rows come back in config order."""
    cells = list(config.cells())
    threads = thread_count() if threads is None else max(1, threads)
    if threads == 1 or len(cells) == 1:
        chunks = [_run_cell(config, *c) for c in cells]
    else:
        with ThreadPoolExecutor(max_workers=min(threads, len(cells))) as pool:
            chunks = list(pool.map(lambda c: _run_cell(config, *c), cells))
    return [row for chunk in chunks for row in chunk]


def write_csv(rows, path_or_file) -> None:
    def dump(fh):
        w = csv.DictWriter(fh, fieldnames=SWEEP_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)

    if hasattr(path_or_file, "write"):
        dump(path_or_file)
    else:
        with open(path_or_file, "w", newline="", encoding="utf-8") as fh:
            dump(fh)
