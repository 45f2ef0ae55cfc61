"""Acceptance suite: the headline counts of the census, each at exact
tolerance, one printed pass/fail line per criterion.

Criterion 7's sub-claim that series members are singular along a curve
already at k = 1 is provably false (the first series starts at the sextic
with three isolated half-points, a terminal family the 95-list needs); it
is implemented faithfully and marked as an expected failure with the
counterexample.  Everything else must pass exactly.
"""

import random

import pytest

from wfano.brute import fano_box_search, naive_box_search
from wfano.census import diff_census
from wfano.classify import (classify_family, classify_terminal,
                            detect_series_membership, enumerate_48_triples,
                            is_terminal_type, series_member_weights,
                            singularities)
from wfano.core import HypersurfaceFamily, semigroup_member
from wfano.cy import cy_search
from wfano.qsmooth import check_qs13, check_qs13prime, check_vertex

BOX = (100, 200, 200, 400, 600)

EXTREMES = {
    (407, 547, 5311, 12528, 18792): {
        (0, 91, 1), (1, 59, 2), (2, 7, 0), (3, 2, 3), (4, 1, 4)},
    (223, 9101, 46837, 112320, 168480): {
        (0, 1301, 2), (1, 37, 0), (2, 7, 1), (3, 2, 3), (4, 1, 4)},
    (253, 7807, 48101, 112320, 168480): {
        (0, 1301, 1), (1, 37, 2), (2, 7, 0), (3, 2, 3), (4, 1, 4)},
}


def _line(num, ok, text):
    print("%s criterion %s: %s" % ("PASS" if ok else "FAIL", num, text))
    return ok


@pytest.fixture(scope="session")
def classified(structured):
    tri = [s.b for s in structured.series]
    recs = [classify_family(HypersurfaceFamily(w, d), tri)
            for w, d in structured.sporadic]
    return recs


def test_criterion_1_census_counts(structured):
    ok = len(structured.sporadic) == 4442 and len(structured.series) == 48
    _line(1, ok, "structured search: sporadic=%d (want 4442), series=%d"
          " (want 48)" % (len(structured.sporadic), len(structured.series)))
    assert len(structured.sporadic) == 4442
    assert len(structured.series) == 48
    # the pieces of the one-parameter branch agree with the canonical list
    assert structured.diagnostics["series_matches_enumeration"]


def test_criterion_2_brute_box(structured, brute_box):
    assert brute_box.count == 3610, "box count %d != 3610" % brute_box.count
    # box-restricted census: sporadic plus all series members inside the box
    full = {(w, d) for w, d in structured.sporadic
            if all(w[i] <= BOX[i] for i in range(5))}
    for fam in structured.series:
        if not fam.well_formed_members:
            continue
        k = 1
        while True:
            w, d = fam.member(k)
            if any(w[i] > BOX[i] for i in range(5)):
                break
            full.add((w, d))
            k += 2
    brute = set(brute_box.records)
    only_brute = sorted(brute - full)
    only_struct = sorted(full - brute)
    ok = brute_box.count == 3610 and not only_brute and not only_struct
    _line(2, ok, "box census: %d families (want 3610); diff: %d/%d"
          % (brute_box.count, len(only_brute), len(only_struct)))
    assert not only_brute, only_brute[:5]
    assert not only_struct, only_struct[:5]
    # and through the census-diff interface
    a = [classify_family(HypersurfaceFamily(w, d)) for w, d in
         sorted(full)[:50]]
    only_a, only_b, common = diff_census(a, a)
    assert not only_a and not only_b and len(common) == len(a)


def test_criterion_3_terminal_count(classified):
    terminal = [r for r in classified if r.terminal]
    ok = len(terminal) == 95
    _line(3, ok, "terminal families: %d (want 95)" % len(terminal))
    if not ok:
        for r in terminal:
            print("  terminal:", r.weights, r.degree)
    assert len(terminal) == 95
    # spot checks: first and last of the classical list
    keys = {(r.weights, r.degree) for r in terminal}
    assert ((1, 1, 1, 1, 1), 4) in keys
    assert ((1, 5, 6, 22, 33), 66) in keys


def test_criterion_4_tiger_ke_counts(classified):
    tf = sum(1 for r in classified if r.tiger_free)
    ke = sum(1 for r in classified if r.ke)
    ok = tf == 1605 and ke == 1936
    _line(4, ok, "tiger-free=%d (want 1605), KE=%d (want 1936)" % (tf, ke))
    assert tf == 1605
    assert ke == 1936
    # the sufficient criteria are nested
    assert all(r.ke for r in classified if r.tiger_free)


def test_criterion_5_triples_and_k3(structured):
    tri = enumerate_48_triples()
    k3 = cy_search(3, 50)
    filtered = sorted(tuple(w[:3]) for w, _ in k3.records
                      if w[3] == w[0] + w[1] + w[2])
    ok = len(tri) == 48 and filtered == tri and k3.count == 95
    _line(5, ok, "triples=%d (want 48), K3 systems=%d (want 95),"
          " correspondence=%s" % (len(tri), k3.count, filtered == tri))
    assert len(tri) == 48
    assert filtered == tri
    assert k3.count == 95
    assert [s.b for s in structured.series] == tri


def test_criterion_6_extreme_tuples(structured):
    sporadic = dict(structured.sporadic)
    ok = True
    for w, expected in EXTREMES.items():
        d = sum(w) - 1
        assert sporadic.get(w) == d, "%r missing from the sporadic census" % (w,)
        fam = HypersurfaceFamily(w, d)
        got = set()
        for i in range(5):
            m, j = check_vertex(fam, i)
            got.add((i, m, j))
        if got != expected:
            ok = False
            print("  witness mismatch for", w, got, expected)
    _line(6, ok, "three extreme tuples sporadic with matching monomials")
    assert ok


# --- criterion 7: property suites runnable without any census -------------

def test_criterion_7_subset_condition_equivalence():
    rng = random.Random(101)
    n = 0
    for _ in range(10000):
        w = tuple(sorted(rng.randint(1, 50) for _ in range(5)))
        fam = HypersurfaceFamily(w, sum(w) - 1)
        assert check_qs13(fam).verdict == check_qs13prime(fam), w
        n += 1
    _line("7a", True, "subset-condition formulations agree on %d samples" % n)


def test_criterion_7_semigroup_oracle():
    def naive(gens, t):
        gens = [g for g in gens if g <= t]
        if t == 0:
            return True
        if not gens:
            return False
        return any(naive(gens[1:], t - k * gens[0])
                   for k in range(t // gens[0] + 1))

    rng = random.Random(103)
    for _ in range(600):
        gens = tuple(sorted(rng.randint(1, 20)
                            for _ in range(rng.randint(1, 4))))
        t = rng.randint(0, 200)
        assert semigroup_member(gens, t) == naive(list(gens), t), (gens, t)
    _line("7b", True, "semigroup table agrees with the bounded oracle")


def test_criterion_7_elimination_invariance():
    from wfano.brute import generic_box_search

    pool = generic_box_search((10, 10, 10, 10, 10)).records
    rng = random.Random(107)
    for w, d in rng.sample(pool, 40):
        fam = HypersurfaceFamily(w, d)
        base = classify_terminal(fam)
        for i in range(5):
            ai = w[i]
            if ai == 1 or d % ai == 0:
                continue
            js = [j for j in range(5)
                  if j != i and w[j] <= d and (d - w[j]) % ai == 0]
            for j in js:
                def picker(vi, vjs, _j=j, _t=i):
                    return _j if vi == _t else vjs[0]
                assert classify_terminal(
                    fam, singularities(fam, vertex_elimination=picker)) == base
    _line("7c", True, "terminality invariant under eliminated-index choice")


def test_criterion_7_reid_tai_family():
    from math import gcd

    for r in range(2, 1001):
        for b in range(1, r):
            if gcd(b, r) == 1 and not is_terminal_type(r, (1, r - 1, b)):
                raise AssertionError((r, b))
    _line("7d", True, "age condition holds on 1/r(1, r-1, b) for r <= 1000")


def test_criterion_7_series_members_nonisolated_k_ge_3():
    for b in enumerate_48_triples():
        if sum(1 for x in b if x % 2 == 0) == 2:
            continue  # no well-formed members
        for k in (3, 5, 7, 9):
            w, d = series_member_weights(b, k)
            basket = singularities(HypersurfaceFamily(w, d))
            assert any(q.nonisolated for q in basket), (b, k)
    _line("7e", True, "series members singular along a curve for k in"
          " {3,5,7,9}")


@pytest.mark.xfail(
    strict=True,
    reason="false as stated: the k=1 member of the (1,1,1) series is the"
           " degree-6 family in P(1,1,1,2,2) with three isolated terminal"
           " half-points (it belongs to the classical 95); see the"
           " decisions ledger",
)
def test_criterion_7_series_members_nonisolated_k_eq_1():
    for b in enumerate_48_triples():
        if sum(1 for x in b if x % 2 == 0) == 2:
            continue
        w, d = series_member_weights(b, 1)
        basket = singularities(HypersurfaceFamily(w, d))
        assert any(q.nonisolated for q in basket), (b, 1)


def test_criterion_7_pruning_soundness():
    pruned = fano_box_search((10, 10, 10, 10, 10), threads=1)
    unpruned = naive_box_search((10, 10, 10, 10, 10))
    assert pruned.records == unpruned.records
    _line("7f", True, "pruned and unpruned box searches agree")


def test_criterion_7_diagnostic_counts(structured):
    d = structured.diagnostics
    print("  diagnostic (non-binding): one-unknown cases with nonzero"
          " pencil determinant: %d (classical run reports 403455;"
          " delta %+d)" % (d["finite_cases"], d["finite_cases"] - 403455))
    print("  diagnostic (non-binding): constant-determinant cases: %d"
          " (classical run reports 550122; delta %+d)"
          % (d["series_cases"], d["series_cases"] - 550122))
    print("  diagnostic (non-binding): deduplicated candidates: %d"
          " (classical run reports 15757; delta %+d)"
          % (d["dedup_prefilter"], d["dedup_prefilter"] - 15757))
    print("  quasi-smooth candidates before series bookkeeping: %d"
          " (classical run reports 4594; delta %+d)"
          % (d["qs_bare"], d["qs_bare"] - 4594))
    assert d["qs_bare"] == 4594
    _line("7g", True, "diagnostics reported with deltas")
