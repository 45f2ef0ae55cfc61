"""Census persistence: JSON Lines records, summaries, diffing.

One record per family, fields in a fixed order so files are diffable and
byte-identical across runs and worker counts:

    weights, degree, kind, quasi_smooth, terminal, tiger_free, ke,
    series (null or {"b": [...], "k": k}), basket

Basket entries are {"r": r, "w": [...], "location": "kind:i,j", "count": c}.
The text layer never carries timestamps; run metadata lives in a sidecar
summary JSON.
"""

from __future__ import annotations

import csv
import io
import json

from .classify import ClassifiedRecord, QuotientSingularity

_FIELDS = ("weights", "degree", "kind", "quasi_smooth", "terminal",
           "tiger_free", "ke", "series", "basket")


def _location_str(loc):
    return "%s:%s" % (loc[0], ",".join(str(i) for i in loc[1:]))


def _location_parse(s):
    kind, _, idx = s.partition(":")
    return (kind,) + tuple(int(x) for x in idx.split(",") if x != "")


def record_to_dict(rec: ClassifiedRecord) -> dict:
    out = {
        "weights": list(rec.weights),
        "degree": rec.degree,
        "kind": rec.kind,
        "quasi_smooth": rec.quasi_smooth,
        "terminal": rec.terminal,
        "tiger_free": rec.tiger_free,
        "ke": rec.ke,
        "series": (None if rec.series is None
                   else {"b": list(rec.series[0]), "k": rec.series[1]}),
        "basket": (None if rec.basket is None else [
            {"r": q.r, "w": list(q.w), "location": _location_str(q.location),
             "count": q.count}
            for q in rec.basket
        ]),
    }
    return out


def record_from_dict(d: dict) -> ClassifiedRecord:
    series = d.get("series")
    basket = d.get("basket")
    return ClassifiedRecord(
        weights=tuple(d["weights"]),
        degree=d["degree"],
        kind=d.get("kind", "fano"),
        quasi_smooth=d.get("quasi_smooth", True),
        terminal=d.get("terminal"),
        tiger_free=d.get("tiger_free"),
        ke=d.get("ke"),
        series=None if series is None else (tuple(series["b"]), series["k"]),
        basket=None if basket is None else [
            QuotientSingularity(q["r"], tuple(q["w"]),
                                _location_parse(q["location"]), q["count"])
            for q in basket
        ],
    )


def record_line(rec: ClassifiedRecord) -> str:
    d = record_to_dict(rec)
    return json.dumps({k: d[k] for k in _FIELDS}, separators=(",", ":"))


def write_jsonl(records, path):
    with open(path, "w") as fh:
        for rec in records:
            fh.write(record_line(rec) + "\n")


def read_jsonl(path):
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append(record_from_dict(json.loads(line)))
            except (ValueError, KeyError) as exc:
                raise ValueError("%s:%d: bad census line (%s)"
                                 % (path, lineno, exc)) from exc
    return out


def write_csv(records, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(_FIELDS)
        for rec in records:
            d = record_to_dict(rec)
            w.writerow([
                " ".join(str(x) for x in d["weights"]),
                d["degree"], d["kind"], d["quasi_smooth"], d["terminal"],
                d["tiger_free"], d["ke"],
                json.dumps(d["series"], separators=(",", ":")),
                json.dumps(d["basket"], separators=(",", ":")),
            ])


def write_summary(path, summary: dict):
    with open(path, "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")


def diff_census(recs_a, recs_b):
    """Set difference on (weights, degree) keys.

    Returns (only_a, only_b, common) as sorted key lists."""
    ka = {(tuple(r.weights), r.degree) for r in recs_a}
    kb = {(tuple(r.weights), r.degree) for r in recs_b}
    return sorted(ka - kb), sorted(kb - ka), sorted(ka & kb)


def dump_csv_string(records):
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(_FIELDS)
    for rec in records:
        d = record_to_dict(rec)
        w.writerow([" ".join(str(x) for x in d["weights"]), d["degree"],
                    d["kind"], d["quasi_smooth"], d["terminal"],
                    d["tiger_free"], d["ke"],
                    json.dumps(d["series"], separators=(",", ":")),
                    json.dumps(d["basket"], separators=(",", ":"))])
    return buf.getvalue()
