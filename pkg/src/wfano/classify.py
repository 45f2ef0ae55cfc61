"""Singularity baskets, terminality, tiger/KE criteria, series detection.

For a quasi-smooth threefold X of degree d in P(a_0..a_4) the singular locus
of the general member decomposes into:

  * vertex points P_i (a_i > 1, a_i not dividing d): eliminating one chart
    coordinate with a monomial x_i^m x_j leaves the cyclic quotient type
    1/a_i(remaining three weights mod a_i);

  * points on an edge (the curve where only x_p, x_q are nonzero) with
    h = gcd(a_p, a_q) > 1: if no pure {p,q}-monomial of degree d exists the
    general member contains the edge (a curve of quotient singularities);
    otherwise it meets the open edge in s - 1 simple points of type
    1/h(complementary weights mod h), s the number of lattice solutions of
    alpha*a_p + beta*a_q = d;

  * curves on a two-dimensional stratum {x_r = x_s = 0} whose three spanning
    weights share h = gcd > 1.  The member always meets the stratum in a
    curve.  When the codim-2 condition holds, d is a multiple of h while
    a_r, a_s are not (well-formedness), so no degree-d monomial is linear in
    x_r or x_s near the stratum; the implicit function theorem then forces
    the chart action 1/h(a_r, a_s) transverse to the curve, and the member
    is singular along it.  The published vertex-plus-edge bookkeeping alone
    would miss exactly these curves.

Terminality of an isolated cyclic quotient 1/r(w_1,w_2,w_3) is the age
condition: every k in [1, r-1] must satisfy sum_i (k*w_i mod r) > r.  Types
with a fixed curve fail it automatically (the ages of an element and its
inverse with a zero weight sum to 2).  Quasi-reflections make the naive age
test invalid, so types are first reduced to a faithful reflection-free form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .core import HypersurfaceFamily, semigroup_member
from .qsmooth import check_codim2, passes_quasi_smooth


class UnsupportedConfiguration(RuntimeError):
    """A quotient type still admits a quasi-reflection after reduction."""


@dataclass(frozen=True)
class QuotientSingularity:
    """Cyclic quotient type 1/r(w) at a location of the general member.

    location kinds:
      ("vertex", i)            isolated point at P_i
      ("edge_points", p, q)    count simple points interior to edge {p,q}
      ("edge_curve", p, q)     member contains the edge spanned by p, q
      ("stratum_curve", r, s)  singular along the curve cut on {x_r=x_s=0}
    """

    r: int
    w: tuple
    location: tuple
    count: int = 1

    @property
    def nonisolated(self) -> bool:
        return self.location[0] in ("edge_curve", "stratum_curve")


def reduce_quotient_type(r: int, w):
    """Reduce 1/r(w) by its quasi-reflection subgroups.

    Whenever the order and two of the weights share a factor g, the subgroup
    of order g acts by reflections on the remaining coordinate and the
    quotient re-coordinatizes to 1/(r/g) with the two shared weights divided
    by g.  Iterating removes every quasi-reflection: an element fixing a
    hyperplane must have its order dividing two of the weights and r.
    """
    w = [x % r for x in w] if r > 1 else [0 for _ in w]
    while r > 1:
        reduced = False
        for k in range(len(w)):
            others = [w[j] for j in range(len(w)) if j != k]
            g = r
            for x in others:
                g = gcd(g, x)
            if g > 1:
                r //= g
                w = [
                    (w[j] % r) if j == k else (w[j] // g) % r
                    for j in range(len(w))
                ]
                reduced = True
                break
        if not reduced:
            break
    if r == 1:
        return 1, tuple(0 for _ in w)
    return r, tuple(x % r for x in w)


def _has_quasi_reflection(r, w):
    if r == 1:
        return False
    ks = np.arange(1, r, dtype=np.int64)
    nonzero = np.zeros(r - 1, dtype=np.int64)
    for wi in w:
        nonzero += (ks * wi) % r != 0
    return bool(np.any(nonzero == 1))


def is_terminal_type(q_or_r, w=None) -> bool:
    """Age condition for a cyclic quotient type, after reduction.

    True iff for every k in [1, r-1] the residues k*w_i mod r sum to more
    than r (trivial group: true).
    """
    if isinstance(q_or_r, QuotientSingularity):
        r, w = q_or_r.r, q_or_r.w
    else:
        r = q_or_r
    r, w = reduce_quotient_type(r, tuple(w))
    if r == 1:
        return True
    if _has_quasi_reflection(r, w):
        raise UnsupportedConfiguration(
            "quasi-reflection survives reduction in 1/%d%r" % (r, tuple(w))
        )
    if r <= 512:
        for k in range(1, r):
            if sum(k * wi % r for wi in w) <= r:
                return False
        return True
    ks = np.arange(1, r, dtype=np.int64)
    total = np.zeros(r - 1, dtype=np.int64)
    for wi in w:
        total += (ks * wi) % r
    return bool(np.all(total > r))


def _edge_solution_count(p: int, q: int, d: int) -> int:
    """Number of nonnegative solutions of alpha*p + beta*q = d."""
    g = gcd(p, q)
    if d % g:
        return 0
    p1, q1, d1 = p // g, q // g, d // g
    if p1 == 1:
        b0 = 0
    else:
        b0 = (d1 * pow(q1, -1, p1)) % p1
    if q1 * b0 > d1:
        return 0
    return 1 + (d1 - q1 * b0) // (p1 * q1)


def singularities(fam: HypersurfaceFamily, vertex_elimination="smallest"):
    """Basket of quotient singularities of the general member (threefolds).

    vertex_elimination chooses which admissible chart coordinate is
    eliminated at a vertex; the terminality verdict is invariant under the
    choice (tested), "smallest" is the deterministic default.
    """
    a = fam.weights
    d = fam.d
    n1 = len(a)
    if n1 != 5:
        raise ValueError("singularity baskets are computed for threefolds")
    basket = []

    # Vertices.
    for i in range(n1):
        ai = a[i]
        if ai == 1 or d % ai == 0:
            continue
        js = [
            j for j in range(n1)
            if j != i and a[j] <= d and (d - a[j]) % ai == 0
        ]
        if not js:
            raise ValueError("family is not quasi-smooth at vertex %d" % i)
        if vertex_elimination == "smallest":
            j = js[0]
        else:
            j = vertex_elimination(i, js)
            if j not in js:
                raise ValueError(
                    "eliminated index %d is not admissible at vertex %d"
                    % (j, i))
        w = tuple((a[k] % ai) for k in range(n1) if k != i and k != j)
        basket.append(QuotientSingularity(ai, w, ("vertex", i)))

    # Edges.
    for p in range(n1):
        for q in range(p + 1, n1):
            h = gcd(a[p], a[q])
            if h == 1:
                continue
            rest = tuple(k for k in range(n1) if k != p and k != q)
            s = _edge_solution_count(a[p], a[q], d)
            w = tuple(a[k] % h for k in rest)
            if s == 0:
                basket.append(QuotientSingularity(h, w, ("edge_curve", p, q)))
            elif s >= 2:
                basket.append(
                    QuotientSingularity(h, w, ("edge_points", p, q), count=s - 1)
                )

    # Two-dimensional singular strata, indexed by the vanishing pair.
    for r_i in range(n1):
        for s_i in range(r_i + 1, n1):
            span = [k for k in range(n1) if k != r_i and k != s_i]
            h = gcd(gcd(a[span[0]], a[span[1]]), a[span[2]])
            if h == 1:
                continue
            w = (a[r_i] % h, a[s_i] % h, 0)
            basket.append(
                QuotientSingularity(h, w, ("stratum_curve", r_i, s_i))
            )

    return basket


def classify_terminal(fam: HypersurfaceFamily, basket=None) -> bool:
    """True iff the basket has no curve of singularities and every point
    type passes the age condition."""
    if basket is None:
        basket = singularities(fam)
    for q in basket:
        if q.nonisolated:
            return False
    for q in basket:
        if not is_terminal_type(q):
            return False
    return True


def tiger_ke_flags(fam: HypersurfaceFamily):
    """Sufficient arithmetic criteria on the two smallest weights.

    tiger_free: d <= a_0*a_1 certifies no effective Q-divisor equivalent to
    -K can break log terminality.  ke: (n-1)*d < n*a_0*a_1 certifies a
    Kaehler-Einstein orbifold metric.  A False means "criterion
    inconclusive", never "tiger exists" / "no metric".
    """
    a = fam.weights
    n = fam.n
    prod = a[0] * a[1]
    tiger_free = fam.d <= prod
    ke = (n - 1) * fam.d < n * prod
    return tiger_free, ke


# ---------------------------------------------------------------------------
# Infinite series: weights (2, k b_1, k b_2, k b_3, k(b_1+b_2+b_3) - 1) and
# degree 2k(b_1+b_2+b_3) for odd k.  A triple b occurs iff the double
# anticanonical system on P(b_1,b_2,b_3) has a quasi-smooth member.
# ---------------------------------------------------------------------------

def double_anticanonical_quasi_smooth(b) -> bool:
    """Does |-2K| of P(b_1,b_2,b_3) have a quasi-smooth member?

    Pure monomial combinatorics on the triple; the triple is only assumed
    primitive (gcd 1), not well formed -- e.g. (1,2,2) qualifies.  The
    codim-2 condition is not part of quasi-smoothness and does not apply
    here (on a surface it would demand the curve to miss the vertices).
    """
    b = tuple(sorted(b))
    return passes_quasi_smooth(b, 2 * sum(b), codim2=False)


def enumerate_48_triples(cap: int = 40):
    """All primitive ascending triples with quasi-smooth double
    anticanonical members, components bounded by cap.

    The vertex condition forces b_3 <= 2(b_1 + b_2), so any cap beyond the
    largest census component is complete; stability under raising the cap
    is asserted in tests against the expected count.
    """
    out = []
    for b1 in range(1, cap + 1):
        for b2 in range(b1, cap + 1):
            for b3 in range(b2, min(cap, 2 * (b1 + b2)) + 1):
                if gcd(gcd(b1, b2), b3) != 1:
                    continue
                if double_anticanonical_quasi_smooth((b1, b2, b3)):
                    out.append((b1, b2, b3))
    return out


def series_member_weights(b, k: int):
    """Sorted weights and degree of the series member at odd parameter k."""
    sb = sum(b)
    ws = tuple(sorted((2, k * b[0], k * b[1], k * b[2], k * sb - 1)))
    return ws, 2 * k * sb


def detect_series_membership(fam: HypersurfaceFamily, triples):
    """(b, k) if the family matches a series shape, smallest k first then
    lexicographically smallest b; None for sporadic families."""
    ws = tuple(sorted(fam.weights))
    d = fam.d
    hits = []
    for b in triples:
        sb = sum(b)
        k, rem = divmod(d, 2 * sb)
        if rem or k < 1 or k % 2 == 0:
            continue
        cand, _ = series_member_weights(b, k)
        if cand == ws:
            hits.append((k, b))
    if not hits:
        return None
    k, b = min(hits)
    return b, k


@dataclass
class ClassifiedRecord:
    """One census row: a family with all classification flags."""

    weights: tuple
    degree: int
    kind: str
    quasi_smooth: bool
    terminal: bool | None = None
    tiger_free: bool | None = None
    ke: bool | None = None
    series: tuple | None = None  # (b, k)
    basket: list | None = None


def classify_family(fam: HypersurfaceFamily, triples=None) -> ClassifiedRecord:
    """Full classification of one family (assumed canonical weights)."""
    from .qsmooth import is_quasi_smooth

    qs = is_quasi_smooth(fam).verdict
    rec = ClassifiedRecord(
        weights=fam.weights,
        degree=fam.d,
        kind=fam.kind,
        quasi_smooth=qs,
    )
    if not qs or fam.n != 4:
        return rec
    basket = singularities(fam)
    rec.basket = basket
    rec.terminal = classify_terminal(fam, basket)
    rec.tiger_free, rec.ke = tiger_ke_flags(fam)
    if triples is not None:
        rec.series = detect_series_membership(fam, triples)
    return rec
