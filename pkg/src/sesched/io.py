"""Text format for instances and CSV format for schedules.

An instance file is line oriented.  Blank lines and lines starting with ``#``
are ignored; ``[name]`` starts a section.  Every other line is a record: an
id followed by ``key=value`` fields separated by whitespace::

    [header]
    available_resources=20 k=3
    [intervals]
    t1 competing=c1
    [events]
    e1 location=Stage%201 resources=1
    [competing]
    c1 interval=t1
    [users]
    u1 activity=t1:0.8 interest=e1:0.9,e4:0.6 competing_interest=c1:0.8

Ids and location names are percent-encoded, so they may contain any
character.  Maps are ``key:value`` lists; absent entries are zero.  Floats are
written with 17 significant digits, which round-trips doubles exactly.
Sections must appear in the order above and unknown fields are rejected.
"""
from __future__ import annotations

import csv
import math
from pathlib import Path
from urllib.parse import quote, unquote

import numpy as np

from .errors import InstanceFormatError, MalformedScheduleError, SESError
from .model import ProblemInstance, Schedule, _as_pairs

SECTIONS = ("header", "intervals", "events", "competing", "users")
FIELDS = {
    "intervals": {"competing"},
    "events": {"location", "resources"},
    "competing": {"interval"},
    "users": {"activity", "interest", "competing_interest"},
}
SCHEDULE_HEADER = ("event_id", "interval_id")


def _q(s: str) -> str:
    return quote(str(s), safe="")


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _sparse(ids, row) -> str:
    nz = np.flatnonzero(row)
    return ",".join(f"{_q(ids[i])}:{_num(row[i])}" for i in nz)


def dumps(instance: ProblemInstance) -> str:
    """Serialize ``instance`` to the text format."""
    inst = instance
    lines = ["# sesched instance", "[header]",
             f"available_resources={_num(inst.theta)} k={inst.k}", "[intervals]"]
    for t, comp in enumerate(inst.competing_by_interval):
        rec = _q(inst.interval_ids[t])
        if comp:
            rec += " competing=" + ",".join(_q(inst.competing_ids[c]) for c in comp)
        lines.append(rec)
    lines.append("[events]")
    for e in range(inst.num_events):
        loc = inst.location_names[int(inst.event_location[e])]
        lines.append(f"{_q(inst.event_ids[e])} location={_q(loc)} "
                     f"resources={_num(inst.event_resources[e])}")
    lines.append("[competing]")
    for c in range(inst.num_competing):
        lines.append(f"{_q(inst.competing_ids[c])} interval={_q(inst.interval_ids[inst.competing_interval[c]])}")
    lines.append("[users]")
    act, mu_e, mu_c = inst.activity.T, inst.event_interest.T, inst.competing_interest.T
    for u in range(inst.num_users):
        rec = [_q(inst.user_ids[u])]
        for name, ids, row in (("activity", inst.interval_ids, act[u]),
                               ("interest", inst.event_ids, mu_e[u]),
                               ("competing_interest", inst.competing_ids, mu_c[u])):
            body = _sparse(ids, row)
            if body:
                rec.append(f"{name}={body}")
        lines.append(" ".join(rec))
    return "\n".join(lines) + "\n"


def write_instance(instance: ProblemInstance, path) -> None:
    Path(path).write_text(dumps(instance), encoding="utf-8")


class _Parser:
    def __init__(self):
        self.header: dict[str, str] = {}
        self.records: dict[str, list] = {s: [] for s in SECTIONS[1:]}

    def parse(self, text: str):
        section = None
        for n, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                name = line[1:-1].strip()
                if name not in SECTIONS:
                    raise InstanceFormatError(f"unknown section [{name}]", n)
                if section is not None and SECTIONS.index(name) <= SECTIONS.index(section):
                    raise InstanceFormatError(f"section [{name}] out of order", n)
                section = name
                continue
            if section is None:
                raise InstanceFormatError("record before the first section", n)
            tokens = line.split()
            if section == "header":
                self._fields(tokens, {"available_resources", "k"}, n, into=self.header)
            else:
                ident = unquote(tokens[0])
                if "=" in tokens[0]:
                    raise InstanceFormatError(f"{section} record must start with an id", n)
                self.records[section].append((n, ident, self._fields(tokens[1:], FIELDS[section], n)))

    @staticmethod
    def _fields(tokens, allowed, n, into=None):
        out = {} if into is None else into
        for tok in tokens:
            key, sep, value = tok.partition("=")
            if not sep:
                raise InstanceFormatError(f"expected key=value, got {tok!r}", n)
            if key not in allowed:
                raise InstanceFormatError(f"unknown field {key!r}", n)
            if key in out:
                raise InstanceFormatError(f"duplicate field {key!r}", n)
            out[key] = value
        return out


def _float(text, n, what):
    try:
        x = float(text)
    except ValueError:
        raise InstanceFormatError(f"{what}: not a number: {text!r}", n) from None
    if not math.isfinite(x):
        raise InstanceFormatError(f"{what}: must be finite", n)
    return x


def _index(records, kind):
    index = {}
    for n, ident, _ in records:
        if ident in index:
            raise InstanceFormatError(f"duplicate {kind} id {ident!r}", n)
        index[ident] = len(index)
    return index


def _pairs(text, index, n, what):
    out = []
    for item in text.split(","):
        key, sep, value = item.rpartition(":")
        if not sep:
            raise InstanceFormatError(f"{what}: expected id:value, got {item!r}", n)
        ident = unquote(key)
        if ident not in index:
            raise InstanceFormatError(f"{what}: unknown id {ident!r}", n)
        x = _float(value, n, what)
        if not 0.0 <= x <= 1.0:
            raise InstanceFormatError(f"{what}: value {x} outside [0, 1]", n)
        out.append((index[ident], x))
    return out


def loads(text: str) -> ProblemInstance:
    """Parse the text format.  Errors name the offending line."""
    p = _Parser()
    p.parse(text)
    if set(p.header) != {"available_resources", "k"}:
        raise InstanceFormatError("[header] needs available_resources and k")
    theta = _float(p.header["available_resources"], None, "available_resources")
    try:
        k = int(p.header["k"])
    except ValueError:
        raise InstanceFormatError(f"k must be an integer, got {p.header['k']!r}") from None

    intervals = _index(p.records["intervals"], "interval")
    events = _index(p.records["events"], "event")
    competing = _index(p.records["competing"], "competing event")
    users = _index(p.records["users"], "user")
    if not intervals:
        raise InstanceFormatError("no intervals")

    locations: dict[str, int] = {}
    event_location, event_resources = [], []
    for n, _, f in p.records["events"]:
        if set(f) != FIELDS["events"]:
            raise InstanceFormatError("events need location and resources", n)
        event_location.append(locations.setdefault(unquote(f["location"]), len(locations)))
        xi = _float(f["resources"], n, "resources")
        if xi < 0:
            raise InstanceFormatError("resources must be non-negative", n)
        event_resources.append(xi)

    competing_interval = []
    for n, _, f in p.records["competing"]:
        if "interval" not in f:
            raise InstanceFormatError("competing event needs an interval", n)
        t = unquote(f["interval"])
        if t not in intervals:
            raise InstanceFormatError(f"unknown interval {t!r}", n)
        competing_interval.append(intervals[t])

    for n, ident, f in p.records["intervals"]:
        listed = [unquote(c) for c in f["competing"].split(",")] if f.get("competing") else []
        for c in listed:
            if c not in competing:
                raise InstanceFormatError(f"unknown competing event {c!r}", n)
        actual = {c for c, i in competing.items() if competing_interval[i] == intervals[ident]}
        if set(listed) != actual:
            raise InstanceFormatError(
                f"interval {ident!r} lists competing events that disagree with [competing]", n)

    n_u = len(users)
    activity = np.zeros((len(intervals), n_u))
    mu_e = np.zeros((len(events), n_u))
    mu_c = np.zeros((len(competing), n_u))
    for u, (n, _, f) in enumerate(p.records["users"]):
        for name, index, target in (("activity", intervals, activity),
                                    ("interest", events, mu_e),
                                    ("competing_interest", competing, mu_c)):
            if f.get(name):
                for i, x in _pairs(f[name], index, n, name):
                    target[i, u] = x

    try:
        return ProblemInstance(
            k=k, theta=theta,
            event_location=np.array(event_location, dtype=np.intp),
            event_resources=np.array(event_resources, dtype=float),
            competing_interval=np.array(competing_interval, dtype=np.intp),
            activity=activity, event_interest=mu_e, competing_interest=mu_c,
            event_ids=tuple(events), interval_ids=tuple(intervals),
            competing_ids=tuple(competing), user_ids=tuple(users),
            location_names=tuple(locations),
        )
    except SESError as exc:
        raise InstanceFormatError(str(exc)) from exc


def read_instance(path) -> ProblemInstance:
    return loads(Path(path).read_text(encoding="utf-8"))


def write_schedule(schedule, instance: ProblemInstance, path) -> None:
    """Write ``event_id,interval_id`` rows sorted by event index."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(SCHEDULE_HEADER)
        for e, t in sorted(_as_pairs(schedule)):
            w.writerow((instance.event_ids[e], instance.interval_ids[t]))


def read_schedule(path, instance: ProblemInstance) -> Schedule:
    events = {x: i for i, x in enumerate(instance.event_ids)}
    intervals = {x: i for i, x in enumerate(instance.interval_ids)}
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != SCHEDULE_HEADER:
        raise InstanceFormatError("schedule file must start with event_id,interval_id", 1)
    pairs = []
    for n, row in enumerate(rows[1:], start=2):
        if len(row) != 2 or row[0] not in events or row[1] not in intervals:
            raise MalformedScheduleError(f"line {n}: cannot resolve {row!r}")
        pairs.append((events[row[0]], intervals[row[1]]))
    return Schedule(instance, pairs)
