"""Command-line interface.

Exit codes: 0 success, 1 usage/parse error, 2 internal invariant violation,
3 census diff mismatch.  WFANO_THREADS mirrors --threads.
"""

from __future__ import annotations

import argparse
import json
import subprocess
import sys

from .core import HypersurfaceFamily, NotWellFormed, canonicalize
from .brute import FANO_BOX, fano_box_search, naive_box_search, resolve_threads
from .census import (diff_census, read_jsonl, record_line, record_to_dict,
                     write_csv, write_jsonl, write_summary)
from .classify import (classify_family, detect_series_membership,
                       enumerate_48_triples)
from .cy import cy_search
from .qsmooth import check_vertex, is_quasi_smooth
from .search import run_structured_search


def _git_hash():
    try:
        out = subprocess.run(["git", "rev-parse", "HEAD"],
                             capture_output=True, text=True, timeout=5)
        if out.returncode == 0:
            return out.stdout.strip()
    except OSError:
        pass
    return None


def _parse_weights(text):
    try:
        ws = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise SystemExit2(1, "cannot parse weights %r: %s" % (text, exc))
    if not ws or any(a < 1 for a in ws):
        raise SystemExit2(1, "weights must be positive integers: %r" % (text,))
    return ws


class SystemExit2(Exception):
    def __init__(self, code, message):
        self.code = code
        self.message = message


def _classified_records(pairs, triples, threads):
    out = []
    for w, d in pairs:
        out.append(classify_family(HypersurfaceFamily(w, d), triples))
    return out


def cmd_search(args):
    threads = resolve_threads(args.threads)
    if args.mode == "structured":
        res = run_structured_search(threads=threads)
        triples = [s.b for s in res.series]
        records = _classified_records(res.sporadic, triples, threads)
        summary = {
            "sporadic": len(res.sporadic),
            "series": len(res.series),
            "series_triples": [list(s.b) for s in res.series],
            "terminal": sum(1 for r in records if r.terminal),
            "tiger_free": sum(1 for r in records if r.tiger_free),
            "ke": sum(1 for r in records if r.ke),
            "diagnostics": {k: v for k, v in res.diagnostics.items()
                            if k != "unmergeable"},
            "workers": threads,
            "git": _git_hash(),
        }
    else:
        bounds = (tuple(int(x) for x in args.bounds.split(","))
                  if args.bounds else FANO_BOX)
        if len(bounds) != 5:
            raise SystemExit2(1, "--bounds needs 5 comma-separated integers")
        if args.no_prune:
            res = naive_box_search(bounds)
        else:
            res = fano_box_search(bounds, threads=threads,
                                  checkpoint_dir=args.checkpoint)
        triples = enumerate_48_triples()
        records = _classified_records(res.records, triples, threads)
        summary = {
            "bounds": list(bounds),
            "quasi_smooth": len(records),
            "terminal": sum(1 for r in records if r.terminal),
            "tiger_free": sum(1 for r in records if r.tiger_free),
            "ke": sum(1 for r in records if r.ke),
            "counters": {k: v for k, v in res.counters.items()},
            "workers": threads,
            "git": _git_hash(),
        }
        if args.compare:
            other = read_jsonl(args.compare)
            only_a, only_b, common = diff_census(records, other)
            summary["compare"] = {
                "only_here": [list(k[0]) for k in only_a],
                "only_other": [list(k[0]) for k in only_b],
                "common": len(common),
            }
    if args.output:
        if args.format == "csv":
            write_csv(records, args.output)
        else:
            write_jsonl(records, args.output)
    else:
        for rec in records:
            print(record_line(rec))
    if args.summary:
        write_summary(args.summary, summary)
    print(json.dumps({k: v for k, v in summary.items()
                      if k not in ("series_triples", "diagnostics")},
                     sort_keys=True), file=sys.stderr)
    if args.mode == "brute" and args.compare:
        if summary["compare"]["only_here"] or summary["compare"]["only_other"]:
            return 3
    return 0


def cmd_check(args):
    ws = _parse_weights(args.weights)
    try:
        canonicalize(ws)
        wf = True
        wf_detail = None
    except NotWellFormed as exc:
        wf = False
        wf_detail = {"index": exc.index, "gcd": exc.common}
    w = tuple(sorted(ws))
    d = args.degree if args.degree is not None else sum(w) - 1
    fam = HypersurfaceFamily(w, d)
    report = is_quasi_smooth(fam, collect=False)
    rec = classify_family(fam, enumerate_48_triples()) if wf else None
    witnesses = []
    for i in range(len(w)):
        v = check_vertex(fam, i)
        if v is not None:
            m, j = v
            if i == j:
                witnesses.append("x_%d^%d" % (i, m + 1))
            else:
                witnesses.append("x_%d^%d*x_%d" % (i, m, j))
        else:
            witnesses.append(None)
    out = {
        "weights": list(w),
        "degree": d,
        "well_formed": wf,
        "well_formed_failure": wf_detail,
        "quasi_smooth": report.verdict,
        "subsets_ok": report.subsets_ok,
        "codim2_ok": report.codim2_ok,
        "failing_subset": (list(report.failing_subset)
                           if report.failing_subset else None),
        "failing_pair": (list(report.failing_pair)
                         if report.failing_pair else None),
        "vertex_witnesses": witnesses,
    }
    if rec is not None and rec.quasi_smooth and fam.n == 4:
        out.update({
            "terminal": rec.terminal,
            "tiger_free": rec.tiger_free,
            "ke": rec.ke,
            "series": (None if rec.series is None else
                       {"b": list(rec.series[0]), "k": rec.series[1]}),
            "basket": record_to_dict(rec)["basket"],
        })
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print("P(%s), degree %d" % (", ".join(str(x) for x in w), d))
        print("  well formed:   %s" % (wf if wf else "no (%r)" % (wf_detail,)))
        print("  quasi-smooth:  %s" % report.verdict)
        if not report.subsets_ok:
            print("  failing subset: %s" % (out["failing_subset"],))
        if not report.codim2_ok:
            print("  failing pair:   %s" % (out["failing_pair"],))
        print("  vertex monomials: %s"
              % ", ".join(x for x in witnesses if x) )
        if "terminal" in out:
            print("  terminal:      %s" % out["terminal"])
            print("  tiger-free:    %s   KE: %s"
                  % (out["tiger_free"], out["ke"]))
            print("  series:        %s" % (out["series"],))
            if out["basket"]:
                for q in out["basket"]:
                    print("    1/%d%s at %s x%d"
                          % (q["r"], tuple(q["w"]), q["location"], q["count"]))
    return 0


def cmd_diff(args):
    try:
        a = read_jsonl(args.file_a)
        b = read_jsonl(args.file_b)
    except ValueError as exc:
        raise SystemExit2(1, str(exc))
    only_a, only_b, common = diff_census(a, b)
    print(json.dumps({
        "only_in_a": [list(k[0]) for k in only_a],
        "only_in_b": [list(k[0]) for k in only_b],
        "only_in_a_count": len(only_a),
        "only_in_b_count": len(only_b),
        "common": len(common),
    }, indent=2))
    return 0 if not only_a and not only_b else 3


def cmd_classify(args):
    recs = read_jsonl(args.input)
    triples = enumerate_48_triples()
    out = []
    for rec in recs:
        fam = HypersurfaceFamily(rec.weights, rec.degree)
        out.append(classify_family(fam, triples))
    if args.output:
        if args.format == "csv":
            write_csv(out, args.output)
        else:
            write_jsonl(out, args.output)
    summary = {
        "records": len(out),
        "quasi_smooth": sum(1 for r in out if r.quasi_smooth),
        "terminal": sum(1 for r in out if r.terminal),
        "tiger_free": sum(1 for r in out if r.tiger_free),
        "ke": sum(1 for r in out if r.ke),
        "series_members": sum(1 for r in out if r.series is not None),
    }
    if args.summary:
        write_summary(args.summary, summary)
    print(json.dumps(summary, sort_keys=True))
    return 0


def cmd_series(args):
    if args.action != "enumerate":
        raise SystemExit2(1, "unknown series action %r" % (args.action,))
    for b in enumerate_48_triples():
        print(json.dumps({"b": list(b)}, separators=(",", ":")))
    return 0


def cmd_cy(args):
    res = cy_search(args.dim, args.max_weight)
    lines = [json.dumps({"weights": list(w), "degree": d},
                        separators=(",", ":"))
             for w, d in res.records]
    if args.output:
        with open(args.output, "w") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    else:
        for line in lines:
            print(line)
    print(json.dumps({"count": len(lines), "dimension": args.dim,
                      "max_weight": args.max_weight}, sort_keys=True),
          file=sys.stderr)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="wfano",
        description="Census and classification of quasi-smooth hypersurfaces"
                    " in weighted projective spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_threads(sp):
        sp.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: all cores or"
                             " WFANO_THREADS)")

    ps = sub.add_parser("search", help="run the census searches")
    add_threads(ps)
    ps.add_argument("mode", choices=["structured", "brute"])
    ps.add_argument("--bounds", help="comma-separated box for brute mode")
    ps.add_argument("--checkpoint", help="journal directory for brute mode")
    ps.add_argument("--no-prune", action="store_true",
                    help="disable pruning (testing only)")
    ps.add_argument("--compare", help="census file to diff against (brute)")
    ps.add_argument("--output", help="census output path")
    ps.add_argument("--summary", help="summary JSON path")
    ps.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    ps.set_defaults(func=cmd_search)

    pc = sub.add_parser("check", help="analyse one weight system")
    pc.add_argument("weights", help="comma-separated positive integers")
    pc.add_argument("--degree", type=int, default=None,
                    help="degree (default: sum of weights - 1)")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=cmd_check)

    pd = sub.add_parser("diff", help="set difference of two census files")
    pd.add_argument("file_a")
    pd.add_argument("file_b")
    pd.set_defaults(func=cmd_diff)

    pk = sub.add_parser("classify", help="add classification flags")
    add_threads(pk)
    pk.add_argument("--input", required=True)
    pk.add_argument("--output")
    pk.add_argument("--summary")
    pk.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    pk.set_defaults(func=cmd_classify)

    pe = sub.add_parser("series", help="infinite series")
    pe.add_argument("action", choices=["enumerate"])
    pe.set_defaults(func=cmd_series)

    py = sub.add_parser("cy", help="Calabi-Yau weight systems")
    add_threads(py)
    py.add_argument("--dim", type=int, required=True)
    py.add_argument("--max-weight", type=int, required=True)
    py.add_argument("--output")
    py.set_defaults(func=cmd_cy)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print("error: %s" % exc.message, file=sys.stderr)
        return exc.code
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except Exception as exc:  # internal invariant violation
        print("internal error: %r" % (exc,), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
