"""Exhaustive box search: the independent check on the structured search.

Every well-formed ascending tuple inside a coordinate box is tested for
quasi-smoothness of its anticanonical (or Calabi-Yau) hypersurface.  The
box (100, 200, 200, 400, 600) reproduces the classical 3610-family check.

Enumerating the full box naively is hopeless (about 10^11 tuples), but the
vertex condition at the largest weight pins a_4 to a handful of candidates
per (a_0..a_3) prefix:

    m*a_4 + a_j = d = a_0+..+a_4-1,  1 <= m <= 3
      j < 4:  a_4 = (S-1-a_j)/(m-1) for m in {2,3}   (S = a_0+..+a_3)
      j = 4:  a_4 = (S-1)/m          for m in {1,2,3}

(m <= 3 because four smaller weights sum to less than 4*a_4, an elementary
consequence of the ascending order -- independent of any search machinery,
so the box check remains a genuine oracle for the structured search.)

The candidate derivation and the first filters (range, ascending, vertex
conditions at a_3 and a_2, well-formedness gcds) run vectorized over numpy
int64 blocks; values stay far below 2^63.  Survivors get the exact Python
treatment.  Disabling pruning (`prune=False`) falls back to plain nested
loops with the full test on every tuple; both paths must agree (tested).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .core import well_formed_failure
from .qsmooth import passes_quasi_smooth

FANO_BOX = (100, 200, 200, 400, 600)

PRUNE_STAGES = (
    "ascending order enforced by loop structure",
    "a_4 candidates from the vertex condition at the largest weight",
    "range and integrality masks",
    "vertex conditions at a_3, a_2, a_1, a_0 (vectorized modular checks)",
    "well-formedness gcd check on all 4-subsets (vectorized)",
    "exact quasi-smoothness: codimension-2 pairs, then all index subsets",
)


def prune_order():
    """The filter cascade, cheapest first; exposed for testing."""
    return PRUNE_STAGES


@dataclass
class BruteResult:
    records: list = field(default_factory=list)  # (weights, d) ascending
    counters: dict = field(default_factory=dict)

    @property
    def count(self):
        return len(self.records)


def _degree_offset(kind: str) -> int:
    if kind == "fano":
        return -1
    if kind == "cy":
        return 0
    raise ValueError("kind must be 'fano' or 'cy'")


# ---------------------------------------------------------------------------
# Exact final filter.
# ---------------------------------------------------------------------------

def _exact_check(weights, d, counters, codim2=True):
    if well_formed_failure(weights) is not None:
        counters["killed_wf"] += 1
        return False
    if not passes_quasi_smooth(weights, d, codim2=False):
        counters["killed_qs"] += 1
        return False
    if codim2 and not passes_quasi_smooth(weights, d, codim2=True):
        counters["killed_codim2"] += 1
        return False
    return True


# ---------------------------------------------------------------------------
# Naive reference (tiny boxes, and the --no-prune path).
# ---------------------------------------------------------------------------

def naive_box_search(bounds, kind="fano", codim2=True) -> BruteResult:
    """Plain nested loops, full test on every ascending tuple."""
    off = _degree_offset(kind)
    n1 = len(bounds)
    counters = {"tuples": 0, "killed_wf": 0, "killed_qs": 0,
                "killed_codim2": 0}
    hits = []

    def rec(prefix, start):
        i = len(prefix)
        if i == n1:
            counters["tuples"] += 1
            w = tuple(prefix)
            d = sum(w) + off
            if d < 1:
                return
            if _exact_check(w, d, counters, codim2):
                hits.append((w, d))
            return
        for a in range(start, bounds[i] + 1):
            rec(prefix + [a], a)

    rec([], 1)
    hits.sort()
    return BruteResult(hits, counters)


# ---------------------------------------------------------------------------
# Generic pruned search (any dimension; pure Python, small boxes).
# ---------------------------------------------------------------------------

def generic_box_search(bounds, kind="fano", codim2=True) -> BruteResult:
    """Prefix recursion with last-coordinate candidates from the vertex
    condition.  Sound for any dimension >= 2 and either degree kind."""
    off = _degree_offset(kind)
    kappa = -off  # d = S_total + off
    n1 = len(bounds)
    n = n1 - 1
    counters = {"prefixes": 0, "candidates": 0, "killed_wf": 0,
                "killed_qs": 0, "killed_codim2": 0}
    hits = set()

    def last_candidates(prefix):
        s = sum(prefix)
        cands = set()
        for m in range(1, n + 1):
            v, r = divmod(s - kappa, m)
            if r == 0:
                cands.add(v)
        for aj in prefix:
            for m in range(2, n + 1):
                v, r = divmod(s - kappa - aj, m - 1)
                if r == 0:
                    cands.add(v)
        return cands

    def rec(prefix, start):
        i = len(prefix)
        if i == n:
            counters["prefixes"] += 1
            for a_last in last_candidates(prefix):
                if a_last < prefix[-1] or a_last > bounds[n]:
                    continue
                counters["candidates"] += 1
                w = tuple(prefix) + (a_last,)
                d = sum(w) + off
                if d < 1:
                    continue
                if _exact_check(w, d, counters, codim2):
                    hits.add((w, d))
            return
        for a in range(start, bounds[i] + 1):
            rec(prefix + [a], a)

    rec([], 1)
    return BruteResult(sorted(hits), counters)


# ---------------------------------------------------------------------------
# Vectorized five-weight search.
# ---------------------------------------------------------------------------

def _grid_a2a3(b2, b3):
    """Flattened ascending (a_2, a_3) grid up to the per-coordinate caps."""
    a2s = []
    a3s = []
    for a2 in range(1, b2 + 1):
        m = b3 - a2 + 1
        if m <= 0:
            continue
        a2s.append(np.full(m, a2, dtype=np.int64))
        a3s.append(np.arange(a2, b3 + 1, dtype=np.int64))
    return np.concatenate(a2s), np.concatenate(a3s)


def _vertex_ok_vec(av, d, weights_cols):
    """Vectorized singleton condition at weight array av: some column gives
    d - a_j >= 0 divisible by av."""
    ok = np.zeros(av.shape, dtype=bool)
    for col in weights_cols:
        r = d - col
        ok |= (r >= 0) & (r % av == 0)
    return ok


def _search_a0_block(args):
    a0_list, bounds, codim2 = args
    b0, b1, b2, b3, b4 = bounds
    grid2, grid3 = _grid_a2a3(b2, b3)
    counters = {"prefixes": 0, "candidates": 0, "vec_survivors": 0,
                "killed_wf": 0, "killed_qs": 0, "killed_codim2": 0}
    hits = []
    for a0 in a0_list:
        for a1 in range(a0, b1 + 1):
            sel = grid2 >= a1
            A2 = grid2[sel]
            A3 = grid3[sel]
            if A2.size == 0:
                continue
            counters["prefixes"] += int(A2.size)
            T = (a0 + a1 - 1) + A2 + A3  # S - 1
            cand_list = []
            # j = 4 (self): a_4 = T/m
            for m in (1, 2, 3):
                q, r = np.divmod(T, m)
                mask = r == 0
                if mask.any():
                    cand_list.append((A2[mask], A3[mask], q[mask]))
            # j < 4: a_4 = (T - a_j)/(m-1), m in {2, 3}
            for const in (a0, a1):
                num = T - const
                cand_list.append((A2, A3, num))
                q, r = np.divmod(num, 2)
                mask = r == 0
                if mask.any():
                    cand_list.append((A2[mask], A3[mask], q[mask]))
            for col in (A2, A3):
                num = T - col
                cand_list.append((A2, A3, num))
                q, r = np.divmod(num, 2)
                mask = r == 0
                if mask.any():
                    cand_list.append((A2[mask], A3[mask], q[mask]))
            for C2, C3, C4 in cand_list:
                mask = (C4 >= C3) & (C4 <= b4)
                if not mask.any():
                    continue
                C2, C3, C4 = C2[mask], C3[mask], C4[mask]
                counters["candidates"] += int(C4.size)
                d = (a0 + a1) + C2 + C3 + C4 - 1
                cols = (np.int64(a0), np.int64(a1), C2, C3, C4)
                ok = _vertex_ok_vec(C3, d, cols)
                C2, C3, C4, d = C2[ok], C3[ok], C4[ok], d[ok]
                if C4.size == 0:
                    continue
                cols = (np.int64(a0), np.int64(a1), C2, C3, C4)
                ok = _vertex_ok_vec(C2, d, cols)
                C2, C3, C4, d = C2[ok], C3[ok], C4[ok], d[ok]
                if C4.size == 0:
                    continue
                cols = (np.int64(a0), np.int64(a1), C2, C3, C4)
                ok = _vertex_ok_vec(C4, d, cols)
                ok &= _vertex_ok_vec(np.full_like(C2, a1), d, cols)
                ok &= _vertex_ok_vec(np.full_like(C2, a0), d, cols)
                C2, C3, C4 = C2[ok], C3[ok], C4[ok]
                if C4.size == 0:
                    continue
                # well-formedness: every 4-subset of the weights coprime
                g01 = np.int64(gcd(a0, a1))
                wf = np.gcd(np.gcd(g01, C2), C3) == 1
                wf &= np.gcd(np.gcd(g01, C2), C4) == 1
                wf &= np.gcd(np.gcd(g01, C3), C4) == 1
                wf &= np.gcd(np.gcd(np.gcd(np.int64(a0), C2), C3), C4) == 1
                wf &= np.gcd(np.gcd(np.gcd(np.int64(a1), C2), C3), C4) == 1
                C2, C3, C4 = C2[wf], C3[wf], C4[wf]
                counters["vec_survivors"] += int(C4.size)
                for a2, a3, a4 in zip(C2.tolist(), C3.tolist(), C4.tolist()):
                    w = (a0, a1, a2, a3, a4)
                    d_ = a0 + a1 + a2 + a3 + a4 - 1
                    if _exact_check(w, d_, counters, codim2):
                        hits.append((w, d_))
    return hits, counters


def fano_box_search(bounds=FANO_BOX, threads=None, checkpoint_dir=None,
                    codim2=True, prune=True) -> BruteResult:
    """The five-weight anticanonical box search.

    With prune=False every tuple is enumerated and fully tested (only
    sensible for tiny boxes).  Checkpointing journals completed a_0 values
    so an interrupted run resumes.
    """
    if not prune:
        return naive_box_search(bounds, "fano", codim2)
    if len(bounds) != 5:
        raise ValueError("fano_box_search expects 5 bounds")
    threads = resolve_threads(threads)

    done = {}
    journal = None
    if checkpoint_dir:
        os.makedirs(checkpoint_dir, exist_ok=True)
        journal = os.path.join(checkpoint_dir, "brute_checkpoint.jsonl")
        if os.path.exists(journal):
            with open(journal) as fh:
                for line in fh:
                    rec = json.loads(line)
                    done[rec["a0"]] = [
                        (tuple(w), d) for w, d in rec["hits"]
                    ]

    todo = [a0 for a0 in range(1, bounds[0] + 1) if a0 not in done]
    blocks = [([a0], bounds, codim2) for a0 in todo]
    counters = {}
    results = dict(done)

    def merge_counters(c):
        for k, v in c.items():
            counters[k] = counters.get(k, 0) + v

    if threads > 1 and len(blocks) > 1:
        import multiprocessing as mp

        with mp.Pool(threads) as pool:
            for (a0s, _, _), (hits, c) in zip(
                blocks, pool.imap(_search_a0_block, blocks)
            ):
                results[a0s[0]] = hits
                merge_counters(c)
                if journal:
                    with open(journal, "a") as fh:
                        fh.write(json.dumps(
                            {"a0": a0s[0], "hits": hits}) + "\n")
    else:
        for block in blocks:
            hits, c = _search_a0_block(block)
            results[block[0][0]] = hits
            merge_counters(c)
            if journal:
                with open(journal, "a") as fh:
                    fh.write(json.dumps(
                        {"a0": block[0][0], "hits": hits}) + "\n")

    records = sorted(
        {(tuple(w), d) for hits in results.values() for w, d in hits}
    )
    counters["quasi_smooth"] = len(records)
    return BruteResult(records, counters)


def brute_search(bounds, kind="fano", threads=None, checkpoint_dir=None,
                 codim2=True, prune=True) -> BruteResult:
    """Box search for any dimension: the vectorized engine for five Fano
    weights, the generic engine otherwise."""
    if kind == "fano" and len(bounds) == 5 and prune:
        return fano_box_search(bounds, threads=threads,
                               checkpoint_dir=checkpoint_dir, codim2=codim2)
    if not prune:
        return naive_box_search(bounds, kind, codim2)
    return generic_box_search(bounds, kind, codim2)


def resolve_threads(threads=None) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("WFANO_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1
