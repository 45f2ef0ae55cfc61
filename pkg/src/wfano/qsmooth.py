"""Quasi-smoothness of the general degree-d hypersurface in P(a_0..a_n).

The combinatorial conditions on the monomials of degree d are:

  vertex    -- for every i there are m >= 1 and j with m*a_i + a_j = d;
  codim2    -- for every pair i < j whose complementary weights share a
               common factor, some degree-d monomial avoids x_i and x_j
               (the hypersurface then misses that singular stratum, which
               the adjunction formula requires);
  subsets   -- for every nonempty I there is an injection e from I into
               {0..n} such that for each i in I a monomial
               x_{e(i)} * prod_{j in I} x_j^{m_ij} of degree d exists.

The subset condition has an equivalent form used by graded-ring census
tables: for every I, either a degree-d monomial supported inside I exists,
or the injection clause holds.  Both are implemented; their agreement is a
test, not an assumption.

Key reading of the subset condition: for fixed I the admissible targets
t = e(i) are those with d - a_t in the semigroup generated by {a_j : j in I},
and this set T(I) does not depend on i.  An injection from I into T(I)
therefore exists if and only if |T(I)| >= |I|.  No matching algorithm is
needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .core import HypersurfaceFamily, semigroup_member, semigroup_witness


def check_vertex(fam: HypersurfaceFamily, i: int):
    """A witness (m, j) with m*a_i + a_j = d and m >= 1, or None.

    Prefers j = i when a_i divides d (the general member then misses the
    vertex P_i); otherwise takes the smallest admissible j.
    """
    a = fam.weights
    d = fam.d
    ai = a[i]
    if d % ai == 0 and d // ai >= 2:
        return d // ai - 1, i
    for j in range(len(a)):
        if j == i:
            continue
        m, r = divmod(d - a[j], ai)
        if r == 0 and m >= 1:
            return m, j
    return None


def _codim2_pair_active(weights, i, j):
    g = 0
    for k, ak in enumerate(weights):
        if k != i and k != j:
            g = gcd(g, ak)
    return g > 1


def check_codim2(fam: HypersurfaceFamily, i: int, j: int) -> bool:
    """Condition for the pair i < j: vacuous unless the complementary
    weights share a factor, in which case a degree-d monomial avoiding
    x_i, x_j must exist."""
    a = fam.weights
    if not _codim2_pair_active(a, i, j):
        return True
    rest = tuple(ak for k, ak in enumerate(a) if k != i and k != j)
    return semigroup_member(rest, fam.d)


def codim2_failures(fam: HypersurfaceFamily):
    """All pairs (i, j) violating the codim-2 condition."""
    bad = []
    n1 = len(fam.weights)
    for i in range(n1):
        for j in range(i + 1, n1):
            if not check_codim2(fam, i, j):
                bad.append((i, j))
    return bad


def target_set(fam: HypersurfaceFamily, I):
    """Indices t with d - a_t representable in the semigroup of {a_j: j in I}.

    The injection of the subset condition exists iff this set has at least
    |I| elements (see module docstring).
    """
    a = fam.weights
    gens = tuple(sorted(a[j] for j in I))
    out = []
    seen = {}
    for t, at in enumerate(a):
        r = fam.d - at
        if r < 0:
            continue
        ok = seen.get(r)
        if ok is None:
            ok = semigroup_member(gens, r)
            seen[r] = ok
        if ok:
            out.append(t)
    return out


def _subsets_by_mask(n1):
    for mask in range(1, 1 << n1):
        yield mask, [i for i in range(n1) if mask >> i & 1]


@dataclass
class QuasiSmoothReport:
    """Full evidence for a quasi-smoothness verdict."""

    family: HypersurfaceFamily
    verdict: bool
    subsets_ok: bool
    codim2_ok: bool
    per_subset: dict = field(default_factory=dict)
    failing_subset: tuple | None = None
    failing_pair: tuple | None = None
    vertex_witnesses: list = field(default_factory=list)


def check_qs13(fam: HypersurfaceFamily, collect: bool = False):
    """Subset condition over every nonempty I, smallest bitmask first.

    Returns a QuasiSmoothReport whose verdict covers the subset condition
    only (pair it with check_codim2 for the full geometric verdict).
    """
    report = QuasiSmoothReport(fam, True, True, True)
    n1 = len(fam.weights)
    for mask, I in _subsets_by_mask(n1):
        ts = target_set(fam, I)
        passes = len(ts) >= len(I)
        if collect:
            report.per_subset[tuple(I)] = {
                "pure_monomial_witness": _pure_witness(fam, I),
                "target_set_size": len(ts),
                "passes": passes,
            }
        if not passes:
            report.verdict = False
            report.subsets_ok = False
            if report.failing_subset is None:
                report.failing_subset = tuple(I)
            if not collect:
                return report
    return report


def _pure_witness(fam, I):
    gens = tuple(fam.weights[j] for j in I)
    expo = semigroup_witness(gens, fam.d)
    if expo is None:
        return None
    full = [0] * len(fam.weights)
    for j, e in zip(I, expo):
        full[j] += e
    return tuple(full)


def check_qs13prime(fam: HypersurfaceFamily) -> bool:
    """Per subset: a degree-d monomial supported in I exists, or the
    injection clause holds.  Must agree with check_qs13 (tested)."""
    a = fam.weights
    for mask, I in _subsets_by_mask(len(a)):
        gens = tuple(sorted(a[j] for j in I))
        if semigroup_member(gens, fam.d):
            continue
        if len(target_set(fam, I)) < len(I):
            return False
    return True


def _fast_vertex_ok(weights, d):
    # Exactly the singleton subset condition: T({i}) nonempty, i.e. some
    # target a_t with d - a_t a nonnegative multiple of a_i.  Zero exponents
    # are allowed here; the standalone vertex report insists on m >= 1.
    for ai in weights:
        ok = False
        for at in weights:
            r = d - at
            if r >= 0 and r % ai == 0:
                ok = True
                break
        if not ok:
            return False
    return True


def passes_quasi_smooth(weights, d, codim2: bool = True) -> bool:
    """Fast combined verdict, no report construction.

    This is the filter the search and brute-force layers call millions of
    times; the vertex filter runs first because it kills most candidates
    with a handful of modular checks.  codim2=False gives the bare
    quasi-smoothness verdict (subset condition only), which is what the
    double-anticanonical membership question on surfaces needs.
    """
    if not _fast_vertex_ok(weights, d):
        return False
    fam = HypersurfaceFamily(weights, d)
    n1 = len(weights)
    if codim2:
        for i in range(n1):
            for j in range(i + 1, n1):
                if not check_codim2(fam, i, j):
                    return False
    return check_qs13(fam).verdict


def is_quasi_smooth(fam: HypersurfaceFamily, collect: bool = False) -> QuasiSmoothReport:
    """Geometric verdict: subset condition plus all codim-2 pairs.

    The vertex condition is implied by the subset condition on singletons
    (any degree-d pure power x_t counts), but is evaluated first as a cheap
    filter; standalone vertex witnesses are reported with exponent >= 1.
    """
    report = check_qs13(fam, collect=collect)
    n1 = len(fam.weights)
    for i in range(n1):
        for j in range(i + 1, n1):
            if not check_codim2(fam, i, j):
                report.codim2_ok = False
                if report.failing_pair is None:
                    report.failing_pair = (i, j)
    report.verdict = report.subsets_ok and report.codim2_ok
    if collect or report.verdict:
        report.vertex_witnesses = [check_vertex(fam, i) for i in range(n1)]
    return report
