"""Structured search for anticanonically embedded quasi-smooth families.

The vertex conditions of a degree d = sum(a) - 1 hypersurface are recast as
a linear system

    (M + J + U) (a_0 .. a_4)^t = (-1, ..., -1)^t

with M = diag(m_0..m_4), J the all -1 matrix and U a matrix with a single 1
per row (row i encodes the monomial x_i^{m_i} x_{e(i)}).  With weights
sorted ascending the top exponents are a priori bounded:

    3 <= m_2 <= 16,   2 <= m_3 <= 6,   1 <= m_4 <= 3,

and whenever the determinant keeps its bilinear term, min(m_0, m_1) <= 83.
Fixing U, m_2, m_3, m_4 and one of m_0/m_1 leaves a one-unknown pencil: the
determinant is alpha*m + beta and the Cramer numerators are linear in m, so
either alpha != 0 and positivity pins m into a short interval (finite
solutions), or alpha = 0 and the weights are linear functions of m (a
one-parameter series piece).

Both the m_1 <= 83 and the mirrored m_0 <= 83 branch are enumerated, so the
min() bound is covered regardless of which exponent is the small one.
Degenerate pencils (determinant vanishing at the solved point or
identically) go through exact rank analysis instead of Cramer.

All arithmetic is exact; a wrong candidate is impossible, only a slow one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .core import well_formed_failure
from .qsmooth import passes_quasi_smooth

# Exponent bounds for the sorted Fano search in dimension four.  These are
# data of the method, not re-derived at runtime.
EXPONENT_BOUNDS = {
    "m2": (3, 16),
    "m3": (2, 6),
    "m4": (1, 3),
    "case1_cap": 83,
}

def exponent_bounds():
    """The a priori exponent ranges and the small-exponent cap, as data."""
    return dict(EXPONENT_BOUNDS)


_SCAN_CAP = 4096   # widest exponent interval scanned directly
_INF = None        # open upper interval end


# ---------------------------------------------------------------------------
# Exact small determinants (Bareiss, fraction free).
# ---------------------------------------------------------------------------

def det_int(rows):
    """Exact determinant of a small integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pkk - mik * rk[j]) // prev
            ri[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def _minor(rows, drop_rows, drop_cols):
    return [
        [v for j, v in enumerate(r) if j not in drop_cols]
        for i, r in enumerate(rows)
        if i not in drop_rows
    ]


def _crt(r1, m1, r2, m2):
    """x = r1 mod m1, x = r2 mod m2  ->  (r, lcm) or None."""
    g = gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    l = m1 // g * m2
    t = ((r2 - r1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g) if m2 // g > 1 else 0
    return (r1 + m1 * t) % l, l


# ---------------------------------------------------------------------------
# Search cases and the standalone exact solve.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchCase:
    """One (U, m) configuration.  e[i] is the column of row i's +1 entry;
    exponents may be None (unknown).  rhs is -1 per row for the Fano
    system, 0 for the Calabi-Yau variant."""

    e: tuple
    m: tuple
    rhs: int = -1


class Singular:
    def __repr__(self):
        return "Singular()"


class NoSolution:
    def __repr__(self):
        return "NoSolution()"


def system_matrix(case: SearchCase):
    n1 = len(case.e)
    rows = []
    for i in range(n1):
        if case.m[i] is None:
            raise ValueError("unknown exponent in row %d" % i)
        row = [-1] * n1
        row[case.e[i]] += 1
        row[i] += case.m[i]
        rows.append(row)
    return rows


def _rational_solution_set(rows_int, rhs):
    """Reduced row echelon solve; (particular, kernel_basis) or None."""
    n1 = len(rows_int[0])
    aug = [
        [Fraction(v) for v in r] + [Fraction(c)]
        for r, c in zip(rows_int, rhs)
    ]
    nr = len(aug)
    piv = []
    r = 0
    for c in range(n1):
        p = None
        for i in range(r, nr):
            if aug[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(nr):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
        if r == nr:
            break
    for i in range(r, nr):
        if aug[i][n1] != 0:
            return None
    part = [Fraction(0)] * n1
    for i, c in enumerate(piv):
        part[c] = aug[i][n1]
    free = [c for c in range(n1) if c not in piv]
    kernel = []
    for fc in free:
        v = [Fraction(0)] * n1
        v[fc] = Fraction(1)
        for i, c in enumerate(piv):
            v[c] = -aug[i][fc]
        kernel.append(v)
    return part, kernel


def solve_case(case: SearchCase):
    """Exact solve of (M+J+U) a = rhs with every exponent known.

    Returns a tuple of Fractions, Singular() for rank deficiency, or
    NoSolution() for an inconsistent system.
    """
    rows = system_matrix(case)
    sol = _rational_solution_set(rows, [case.rhs] * len(rows))
    if sol is None:
        return NoSolution()
    part, kernel = sol
    if kernel:
        return Singular()
    return tuple(part)


def accept_solution(sol):
    """Positive integral solutions, canonically sorted, or None."""
    if not isinstance(sol, tuple):
        return None
    vals = []
    for x in sol:
        if x.denominator != 1 or x.numerator < 1:
            return None
        vals.append(x.numerator)
    return tuple(sorted(vals))


# ---------------------------------------------------------------------------
# Per-configuration coefficient bundles.
#
# With m_0, m_1 symbolic, det(A) = g2*m0*m1 + g0*m0 + g1*m1 + d0, and the
# Cramer numerator of column j is mu*m0*m1 + nu*m0 + xi*m1 + ze (columns 0
# and 1 lose their own symbol).  All are integer cofactors of the m-free
# matrix; exactness is what makes the search a proof-grade enumeration.
# ---------------------------------------------------------------------------

def config_bundle(e, m2, m3, m4, rhs=-1):
    n1 = 5
    mdiag = (0, 0, m2, m3, m4)
    a0 = []
    for i in range(n1):
        row = [-1] * n1
        row[e[i]] += 1
        row[i] += mdiag[i]
        a0.append(row)

    d0 = det_int(a0)
    g0 = det_int(_minor(a0, {0}, {0}))
    g1 = det_int(_minor(a0, {1}, {1}))
    g2 = det_int(_minor(a0, {0, 1}, {0, 1}))

    cols = []
    for j in range(n1):
        aj = [row[:] for row in a0]
        for i in range(n1):
            aj[i][j] = rhs
        ze = det_int(aj)
        nu = det_int(_minor(aj, {0}, {0})) if j != 0 else 0
        xi = det_int(_minor(aj, {1}, {1})) if j != 1 else 0
        mu = det_int(_minor(aj, {0, 1}, {0, 1})) if j > 1 else 0
        cols.append((mu, nu, xi, ze))
    return (g2, g0, g1, d0, tuple(cols))


def _branch_forms(bundle, free_index, fixed_m):
    """Determinant alpha*m+beta and numerators s_j*m+t_j in the free
    exponent, at a fixed value of the other one."""
    g2, g0, g1, d0, cols = bundle
    if free_index == 0:
        alpha = g2 * fixed_m + g0
        beta = g1 * fixed_m + d0
        forms = [(mu * fixed_m + nu, xi * fixed_m + ze)
                 for (mu, nu, xi, ze) in cols]
    else:
        alpha = g2 * fixed_m + g1
        beta = g0 * fixed_m + d0
        forms = [(mu * fixed_m + xi, nu * fixed_m + ze)
                 for (mu, nu, xi, ze) in cols]
    return alpha, beta, forms


# ---------------------------------------------------------------------------
# Exact interval intersection for linear constraints c1*m + c0 >= 0.
# ---------------------------------------------------------------------------

def _clip(lo, hi, c1, c0):
    if c1 == 0:
        if c0 < 0:
            return 1, 0
        return lo, hi
    if c1 > 0:
        need = -(c0 // c1)  # ceil(-c0/c1)
        return (need if lo is None else max(lo, need)), hi
    bound = c0 // (-c1)  # floor(c0/-c1)
    return lo, (bound if hi is _INF else min(hi, bound))


def _feasible_interval(alpha, beta, forms, sign, m_lo):
    """Integer m-interval where sign*det >= 1, a_0 >= 1 and the weights
    ascend.  Upper end may be open (None) only when alpha = 0."""
    lo, hi = m_lo, _INF
    lo, hi = _clip(lo, hi, sign * alpha, sign * beta - 1)
    if hi is not _INF and lo > hi:
        return lo, hi
    s0, t0 = forms[0]
    lo, hi = _clip(lo, hi, sign * (s0 - alpha), sign * (t0 - beta))
    if hi is not _INF and lo > hi:
        return lo, hi
    for j in range(len(forms) - 1):
        sj, tj = forms[j]
        sk, tk = forms[j + 1]
        lo, hi = _clip(lo, hi, sign * (sk - sj), sign * (tk - tj))
        if hi is not _INF and lo > hi:
            return lo, hi
    return lo, hi


def _divisors(n):
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            q = n // i
            if q != i:
                out.append(q)
        i += 1
    return out


def _try_point(alpha, beta, forms, m):
    """Candidate ascending weight tuple at one exponent value, or None."""
    D = alpha * m + beta
    if D == 0:
        return None
    vals = []
    for s, t in forms:
        q, r = divmod(s * m + t, D)
        if r != 0 or q < 1:
            return None
        vals.append(q)
    for j in range(4):
        if vals[j] > vals[j + 1]:
            return None
    return tuple(vals)


# ---------------------------------------------------------------------------
# Singular systems: exact lines of solutions.
# ---------------------------------------------------------------------------

def _integer_line(part, direction):
    """Integer points of {part + t*direction} as P0 + s*Q (Q primitive).

    Returns (P0, Q) or None when the line has no integer points.  The
    integer points of a rational line are spaced by the primitive direction
    vector, so scanning one period of parameter offsets decides existence.
    """
    dd = lcm(*(f.denominator for f in direction))
    q = [int(f * dd) for f in direction]
    g = 0
    for x in q:
        g = gcd(g, x)
    q = [x // g for x in q]
    # Re-express: points are part + tau*q, tau rational.  Integer points are
    # spaced by tau-step 1, so some tau0 in [0, 1) works iff any exists.
    # tau0's denominator divides T below.
    T = 1
    for p, w in zip(part, q):
        if w:
            T = lcm(T, p.denominator * abs(w))
        elif p.denominator != 1:
            return None
    if T > 200000:
        raise RuntimeError("integer-line period %d too large" % T)
    for k in range(T):
        tau = Fraction(k, T)
        vals = [p + tau * w for p, w in zip(part, q)]
        if all(v.denominator == 1 for v in vals):
            return [int(v) for v in vals], q
    return None


def _filter_ok(tag, cand):
    """Declarative extra constraint on raw (unsorted) candidate tuples.

    Tags are plain data so that pieces can cross process boundaries.
    """
    if tag is None:
        return True
    kind, free_index, ef, rhs = tag
    assert kind == "free_row"
    d = sum(cand) + rhs
    num = d - cand[ef]
    af = cand[free_index]
    return num > 0 and num % af == 0


def _line_candidates(P, Q, finite_sink, pieces, diagnostics, origin,
                     member_filter=None):
    """Integer, positive, ascending points on an integer line; an unbounded
    feasible ray becomes a series piece."""
    lo, hi = None, _INF
    for j in range(len(P)):
        lo, hi = _clip(lo, hi, Q[j], P[j] - 1)
        if hi is not _INF and lo is not None and lo > hi:
            return
    for j in range(len(P) - 1):
        lo, hi = _clip(lo, hi, Q[j + 1] - Q[j], P[j + 1] - P[j])
        if hi is not _INF and lo is not None and lo > hi:
            return
    if lo is None and hi is _INF:
        # Feasible for every s: impossible for a nonzero direction (some
        # coordinate would go negative), so Q = 0 and P is the lone point.
        if all(x == 0 for x in Q):
            cand = tuple(P)
            if all(x >= 1 for x in cand) and all(
                cand[j] <= cand[j + 1] for j in range(4)
            ):
                if _filter_ok(member_filter, cand):
                    finite_sink.add(cand)
        return
    if hi is _INF:
        if member_filter is not None:
            _refine_free_row_ray(P, Q, lo, member_filter, finite_sink,
                                 pieces, diagnostics, origin)
        else:
            pieces.append({
                "den": 1,
                "forms": tuple((Q[j], P[j]) for j in range(len(P))),
                "residue": 0,
                "modulus": 1,
                "start": lo,
                "origin": origin,
                "member_filter": None,
            })
        diagnostics["line_pieces"] = diagnostics.get("line_pieces", 0) + 1
        return
    if lo is None:
        lo = hi - _SCAN_CAP
    if hi - lo > 8 * _SCAN_CAP:
        diagnostics["line_scan_truncated"] = \
            diagnostics.get("line_scan_truncated", 0) + 1
        lo = hi - 8 * _SCAN_CAP
    for s in range(lo, hi + 1):
        cand = tuple(P[j] + s * Q[j] for j in range(len(P)))
        if all(x >= 1 for x in cand) and all(
            cand[j] <= cand[j + 1] for j in range(4)
        ):
            if _filter_ok(member_filter, cand):
                finite_sink.add(cand)


def _refine_free_row_ray(P, Q, lo, tag, finite_sink, pieces, diagnostics,
                         origin):
    """A feasible ray of weight tuples constrained by the free-row
    divisibility (d(s) - a_ef(s)) / a_free(s) being a positive integer.

    Exact resolution by polynomial division: either the quotient is a
    polynomial (the constraint becomes a congruence and the ray survives as
    a series piece), or the denominator must divide a fixed nonzero
    remainder and only finitely many points qualify.
    """
    kind, free, ef, rhs = tag
    assert kind == "free_row"
    n0 = sum(P) + rhs - P[ef]
    n1 = sum(Q) - Q[ef]
    p0 = P[free]
    q0 = Q[free]

    def emit_point(s):
        cand = tuple(P[j] + s * Q[j] for j in range(len(P)))
        if all(x >= 1 for x in cand) and all(
            cand[j] <= cand[j + 1] for j in range(len(cand) - 1)
        ) and _filter_ok(tag, cand):
            finite_sink.add(cand)

    if q0 == 0:
        if p0 == 0:
            return
        B = abs(p0)
        if B > 1:
            g = gcd(n1, B)
            if n0 % g:
                return
            Bg = B // g
            if Bg > 1:
                sg = (n1 // g) % Bg
                tg = (-(n0 // g)) % Bg
                res = (tg * pow(sg, -1, Bg)) % Bg
            else:
                res, Bg = 0, 1
        else:
            res, Bg = 0, 1
        # m_free = (n0 + s n1)/p0 >= 1, a linear clip on s
        lo2, hi2 = _clip(lo, _INF, n1 * (1 if p0 > 0 else -1),
                         (n0 - p0) * (1 if p0 > 0 else -1))
        if hi2 is not _INF and lo2 > hi2:
            return
        start = lo2 + ((res - lo2) % Bg)
        if hi2 is _INF:
            pieces.append({
                "den": 1,
                "forms": tuple((Q[j], P[j]) for j in range(len(P))),
                "residue": start % Bg,
                "modulus": Bg,
                "start": start,
                "origin": origin,
                "member_filter": None,
            })
        else:
            s = start
            while s <= hi2:
                emit_point(s)
                s += Bg
        return

    R = n0 * q0 - p0 * n1
    if R == 0:
        # m_free is the constant n1/q0 on the whole ray
        if n1 % q0 == 0 and n1 // q0 >= 1:
            pieces.append({
                "den": 1,
                "forms": tuple((Q[j], P[j]) for j in range(len(P))),
                "residue": 0,
                "modulus": 1,
                "start": lo,
                "origin": origin,
                "member_filter": None,
            })
        return
    # den(s) divides the fixed remainder R: finitely many candidates
    for dv in _divisors(R):
        for D in (dv, -dv):
            num = D - p0
            if num % q0:
                continue
            s = num // q0
            if s >= lo:
                emit_point(s)


def _int_consistent(rows, rhs):
    """Cheap fraction-free consistency test for a small linear system."""
    m = [list(r) + [c] for r, c in zip(rows, rhs)]
    nr = len(m)
    nc = len(m[0])
    r = 0
    for c in range(nc - 1):
        piv = None
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        mr = m[r]
        f1 = mr[c]
        for i in range(r + 1, nr):
            if m[i][c]:
                f2 = m[i][c]
                m[i] = [x * f1 - y * f2 for x, y in zip(m[i], mr)]
        r += 1
        if r == nr:
            break
    for i in range(r, nr):
        if m[i][nc - 1]:
            return False
    return True


def _handle_singular_square(e, mvec, finite_sink, pieces, diagnostics, rhs=-1):
    """A square system whose determinant vanishes at known exponents."""
    rows = []
    for i in range(5):
        row = [-1] * 5
        row[e[i]] += 1
        row[i] += mvec[i]
        rows.append(row)
    if not _int_consistent(rows, [rhs] * 5):
        return
    sol = _rational_solution_set(rows, [rhs] * 5)
    if sol is None:
        return
    part, kernel = sol
    if not kernel:
        vals = accept_solution(tuple(part))
        if vals:
            finite_sink.add(vals)
        return
    if len(kernel) == 1:
        line = _integer_line(part, kernel[0])
        if line is None:
            return
        P, Q = line
        if sum(Q) < 0:
            Q = [-x for x in Q]
        _line_candidates(P, Q, finite_sink, pieces, diagnostics,
                         ("detroot", e, tuple(mvec)))
        return
    diagnostics["rank_deficient_2d"] = \
        diagnostics.get("rank_deficient_2d", 0) + 1


def _handle_det_zero_pencil(e, free_index, fixed_m, m2m3m4, finite_sink,
                            pieces, diagnostics, rhs=-1):
    """Determinant identically zero in the free exponent.

    The four rows away from the free one are numeric; their solution set is
    analysed exactly, and the free row only imposes that
    (d - a_{e(free)}) / a_free is a positive integer.
    """
    m2, m3, m4 = m2m3m4
    full_m = [None, None, m2, m3, m4]
    if free_index == 0:
        full_m[1] = fixed_m
    else:
        full_m[0] = fixed_m
    rows = []
    rhsv = []
    for i in range(5):
        if i == free_index:
            continue
        row = [-1] * 5
        row[e[i]] += 1
        row[i] += full_m[i]
        rows.append(row)
        rhsv.append(rhs)
    sol = _rational_solution_set(rows, rhsv)
    if sol is None:
        return
    part, kernel = sol
    tag = ("free_row", free_index, e[free_index], rhs)

    if not kernel:
        vals = tuple(part)
        acc = accept_solution(vals)
        if acc is not None:
            # sortedness is checked on the sorted copy, but the free-row
            # constraint references the raw coordinate order
            raw = tuple(int(x) for x in vals)
            if _filter_ok(tag, raw):
                finite_sink.add(acc)
        return
    if len(kernel) == 1:
        line = _integer_line(part, kernel[0])
        if line is None:
            return
        P, Q = line
        if sum(Q) < 0:
            Q = [-x for x in Q]
        diagnostics["det_zero_lines"] = diagnostics.get("det_zero_lines", 0) + 1
        _line_candidates(P, Q, finite_sink, pieces, diagnostics,
                         ("detzero", e, free_index, fixed_m, m2m3m4),
                         member_filter=tag)
        return
    diagnostics["rank_deficient_2d"] = \
        diagnostics.get("rank_deficient_2d", 0) + 1


# ---------------------------------------------------------------------------
# The one-unknown pencil.
# ---------------------------------------------------------------------------

def solve_one_unknown(bundle, free_index, fixed_m, e, m2m3m4, finite_sink,
                      pieces, diagnostics):
    """Every exact consequence of one (U, m_fixed) configuration.

    Finite integral solutions land in finite_sink (ascending tuples);
    one-parameter families are appended to pieces with exact linear forms
    and their integrality progression.
    """
    alpha, beta, forms = _branch_forms(bundle, free_index, fixed_m)
    m_lo = 3

    if alpha == 0 and beta == 0:
        diagnostics["det_identically_zero"] = \
            diagnostics.get("det_identically_zero", 0) + 1
        seen = diagnostics.setdefault("_seen_detzero", set())
        key = (e, free_index, fixed_m, m2m3m4)
        if key not in seen:
            seen.add(key)
            _handle_det_zero_pencil(e, free_index, fixed_m, m2m3m4,
                                    finite_sink, pieces, diagnostics)
        return

    if alpha == 0:
        diagnostics["series_cases"] += 1
        _collect_series_piece(beta, forms, m_lo, finite_sink, pieces,
                              diagnostics,
                              ("alpha0", e, m2m3m4, free_index, fixed_m))
        return

    diagnostics["finite_cases"] += 1

    # Exponent killing the determinant: rank analysis instead of Cramer.
    if (-beta) % alpha == 0:
        m_star = (-beta) // alpha
        if m_star >= m_lo:
            mvec = _assemble_m(free_index, m_star, fixed_m, m2m3m4)
            seen = diagnostics.setdefault("_seen_singular", set())
            key = (e, mvec)
            if key not in seen:
                seen.add(key)
                _handle_singular_square(e, mvec, finite_sink, pieces,
                                        diagnostics)

    t_const = forms[free_index][1]  # this column has no free-symbol term
    if t_const == 0:
        return  # that weight would be zero

    for sign in (1, -1):
        lo, hi = _feasible_interval(alpha, beta, forms, sign, m_lo)
        if hi is _INF:
            hi = None  # resolved by the divisor route below
        elif lo > hi:
            continue
        if hi is not None and hi - lo + 1 <= _SCAN_CAP:
            for m in range(lo, hi + 1):
                cand = _try_point(alpha, beta, forms, m)
                if cand is not None:
                    finite_sink.add(cand)
        else:
            # det divides the constant column's numerator.
            diagnostics["divisor_route"] = diagnostics.get("divisor_route", 0) + 1
            for dv in _divisors(t_const):
                for D in (dv, -dv):
                    num = D - beta
                    if num % alpha:
                        continue
                    m = num // alpha
                    if m < lo or (hi is not None and m > hi):
                        continue
                    cand = _try_point(alpha, beta, forms, m)
                    if cand is not None:
                        finite_sink.add(cand)


def _assemble_m(free_index, m_free, fixed_m, m2m3m4):
    m2, m3, m4 = m2m3m4
    if free_index == 0:
        return (m_free, fixed_m, m2, m3, m4)
    return (fixed_m, m_free, m2, m3, m4)


def _collect_series_piece(beta, forms, m_lo, finite_sink, pieces, diagnostics,
                          origin):
    """alpha = 0: constant determinant, weights linear in the exponent."""
    B = abs(beta)
    res, mod = 0, 1
    if B > 1:
        for s, t in forms:
            g = gcd(s, B)
            if t % g:
                return  # no integral members at all
            Bg = B // g
            if Bg == 1:
                continue
            sg = (s // g) % Bg
            tg = (-(t // g)) % Bg
            r2 = (tg * pow(sg, -1, Bg)) % Bg
            merged = _crt(res, mod, r2, Bg)
            if merged is None:
                return
            res, mod = merged
    sign = 1 if beta > 0 else -1
    lo, hi = _feasible_interval(0, beta, forms, sign, m_lo)
    if hi is not _INF and lo > hi:
        return
    start = lo + ((res - lo) % mod)
    if hi is not _INF:
        # Only finitely many members: emit them directly.
        m = start
        while m <= hi:
            cand = _try_point(0, beta, forms, m)
            if cand is not None:
                finite_sink.add(cand)
            m += mod
        return
    pieces.append({
        "den": beta,
        "forms": tuple(forms),
        "residue": start % mod,
        "modulus": mod,
        "start": start,
        "origin": origin,
        "member_filter": None,
    })


# ---------------------------------------------------------------------------
# Series assembly.
# ---------------------------------------------------------------------------

class UnmergeablePiece(RuntimeError):
    """A one-parameter family does not match the canonical series shape."""


@dataclass
class SeriesFamily:
    """Canonical infinite series: weights
    (2, k b_1, k b_2, k b_3, k(b_1+b_2+b_3) - 1) of degree 2k(b_1+b_2+b_3)
    for odd k >= 1.

    When exactly two of the b_i are even, every member has four even
    weights sharing the factor 2 (k odd makes k*sum(b)-1 even), so the
    printed presentation is never well formed; the series then exists as a
    formal parametrization only and contributes no census members.
    """

    b: tuple
    pieces: list = field(default_factory=list)

    @property
    def well_formed_members(self) -> bool:
        return sum(1 for x in self.b if x % 2 == 0) != 2

    def member(self, k: int):
        from .classify import series_member_weights

        return series_member_weights(self.b, k)


def _piece_members(piece, count=3, skip=8):
    """A few members from well inside the piece's feasible progression."""
    den = piece["den"]
    mod = max(piece["modulus"], 1)
    m = piece["start"] + skip * mod
    filt = piece.get("member_filter")
    out = []
    guard = 0
    while len(out) < count and guard < 10000:
        guard += 1
        vals = []
        ok = True
        for s, t in piece["forms"]:
            q, r = divmod(s * m + t, den)
            if r:
                ok = False
                break
            vals.append(q)
        if ok and _filter_ok(filt, tuple(vals)):
            out.append((m, tuple(vals)))
        m += mod
    return out


def piece_to_series_shape(piece):
    """(b, k_form) for a linear piece, or raise UnmergeablePiece.

    Sorted by eventual size, the five weight forms must be the constant 2,
    three forms b_j * g(m) with g primitive-integer linear and b_j positive
    integers, and a top form g(m)*(b_1+b_2+b_3) - 1.  Content shared by the
    b_j is absorbed into g so that b is primitive (a triple and its
    multiples parametrize nested member sets).
    """
    den = piece["den"]
    forms = [(Fraction(s, den), Fraction(t, den)) for s, t in piece["forms"]]
    forms.sort(key=lambda f: (f[0], f[1]))
    if not (forms[0][0] == 0 and forms[0][1] == 2):
        raise UnmergeablePiece("no constant weight-2 slot")
    mids = forms[1:4]
    top = forms[4]
    if top[0] != mids[0][0] + mids[1][0] + mids[2][0] or \
       top[1] != mids[0][1] + mids[1][1] + mids[2][1] - 1:
        raise UnmergeablePiece("largest weight is not (sum of middles) - 1")
    for fa, fb in itertools.combinations(mids, 2):
        if fa[0] * fb[1] - fb[0] * fa[1] != 0:
            raise UnmergeablePiece("middle weights are not proportional")
    if any(f[0] <= 0 for f in mids):
        raise UnmergeablePiece("middle weight with nonpositive growth")
    L = 1
    for sl, ic in mids:
        L = lcm(L, sl.denominator, ic.denominator)
    ints = [(int(sl * L), int(ic * L)) for sl, ic in mids]
    gs = 0
    for s, _t in ints:
        gs = gcd(gs, s)
    bs = [s // gs for s, _t in ints]
    # intercept part of the primitive form, sign preserved
    j0 = 0
    prim_t, rem = divmod(ints[j0][1], bs[j0])
    if rem:
        raise UnmergeablePiece("middle weights are not integer multiples")
    for (s, t), b in zip(ints, bs):
        if s != b * gs or t != b * prim_t:
            raise UnmergeablePiece("middle weights are not integer multiples")
    cg = gcd(gcd(bs[0], bs[1]), bs[2])
    if cg > 1:
        bs = [b // cg for b in bs]
        gs, prim_t = gs * cg, prim_t * cg
    # k(m) = (gs*m + prim_t) / L on the piece's progression.
    return tuple(sorted(bs)), (gs, prim_t, L)


def assemble_series(pieces, validate=True):
    """Merge raw one-parameter families into canonical series records.

    Pieces whose large members fail well-formedness or quasi-smoothness are
    dropped (the linear system only encodes vertex conditions); surviving
    shapes must match the canonical form.  Returns (series, unmergeable,
    dropped_count).
    """
    out = {}
    unmergeable = []
    dropped = 0
    seen = set()
    for piece in pieces:
        key = (piece["den"], piece["forms"], piece["modulus"],
               piece["residue"])
        if key in seen:
            continue
        seen.add(key)
        if validate:
            ok = 0
            for _m, ws in _piece_members(piece):
                w = tuple(sorted(ws))
                d = sum(w) - 1
                if well_formed_failure(w) is None and \
                        passes_quasi_smooth(w, d):
                    ok += 1
            if ok == 0:
                dropped += 1
                continue
        try:
            b, kform = piece_to_series_shape(piece)
        except UnmergeablePiece as exc:
            unmergeable.append((piece["origin"], str(exc)))
            continue
        fam = out.get(b)
        if fam is None:
            fam = SeriesFamily(b)
            out[b] = fam
        fam.pieces.append({"kform": kform, "modulus": piece["modulus"],
                           "residue": piece["residue"],
                           "start": piece["start"]})
    return sorted(out.values(), key=lambda f: f.b), unmergeable, dropped


# ---------------------------------------------------------------------------
# Full structured search.
# ---------------------------------------------------------------------------

def case2_case3_candidates():
    """Families the one-unknown pencils can miss: the a_0 = a_1 = 1
    reduction (prepend 1 to a weight-1 K3 system) and the rigid shapes
    (1, a, 1, 1, 1), (1, a, 1, 1, 2), (1, a, 1, 2, 3) with a <= 6."""
    from .cy import cy_search

    out = set()
    for w, _d in cy_search(3, 50).records:
        if 1 in w:
            out.add(tuple(sorted((1,) + w)))
    for a in range(1, 7):
        for shape in ((1, a, 1, 1, 1), (1, a, 1, 1, 2), (1, a, 1, 2, 3)):
            out.add(tuple(sorted(shape)))
    return out


def _iter_mbox():
    (l2, h2) = EXPONENT_BOUNDS["m2"]
    (l3, h3) = EXPONENT_BOUNDS["m3"]
    (l4, h4) = EXPONENT_BOUNDS["m4"]
    for m4 in range(l4, h4 + 1):
        for m3 in range(l3, h3 + 1):
            for m2 in range(l2, h2 + 1):
                yield m2, m3, m4


def _search_worker(args):
    e_list, cap = args
    finite = set()
    pieces = []
    diag = {"configs": 0, "finite_cases": 0, "series_cases": 0}
    for e in e_list:
        for m2, m3, m4 in _iter_mbox():
            bundle = config_bundle(e, m2, m3, m4)
            diag["configs"] += 1
            mtriple = (m2, m3, m4)
            for fixed in range(3, cap + 1):
                solve_one_unknown(bundle, 0, fixed, e, mtriple, finite,
                                  pieces, diag)
                solve_one_unknown(bundle, 1, fixed, e, mtriple, finite,
                                  pieces, diag)
    return finite, pieces, diag


@dataclass
class StructuredSearchResult:
    sporadic: list                 # [(weights, d)] canonical, sorted
    series: list                   # [SeriesFamily]
    diagnostics: dict
    census: list = field(default_factory=list)   # sporadic + series members
    removed: dict = field(default_factory=dict)  # audit: tuple -> reason


def run_structured_search(threads=None, series_removal="weight2_led",
                          progress=None) -> StructuredSearchResult:
    """The full anticanonical census in weighted projective 4-space.

    Enumerates every exponent configuration inside the a priori bounds,
    solves each pencil exactly, deduplicates, filters by well-formedness
    and quasi-smoothness (with the codimension-2 condition), assembles the
    infinite series and removes their members from the sporadic list.

    series_removal picks the bookkeeping for members of infinite series:
      "weight2_led" (default) removes a member only when its smallest
          weight is the distinguished 2, i.e. k*b_1 >= 2.  The k = 1
          members of series with b_1 = 1 contain a weight-1 coordinate and
          are listed as sporadic; this is the convention of the published
          census (it reproduces the 4442 sporadic count, and keeps every
          terminal member listed).
      "all_k" removes every member; "k_ge_3" keeps all k = 1 members.
    """
    from .brute import resolve_threads
    from .classify import enumerate_48_triples, detect_series_membership
    from .core import HypersurfaceFamily

    threads = resolve_threads(threads)
    cap = EXPONENT_BOUNDS["case1_cap"]
    e_all = list(itertools.product(range(5), repeat=5))
    nchunks = max(threads * 8, 1)
    chunks = [(e_all[i::nchunks], cap) for i in range(nchunks)]

    finite = set()
    pieces = []
    diag = {"configs": 0, "finite_cases": 0, "series_cases": 0}

    def merge(res):
        f, p, dg = res
        finite.update(f)
        pieces.extend(p)
        for k, v in dg.items():
            if k.startswith("_"):
                continue
            diag[k] = diag.get(k, 0) + v

    if threads > 1:
        import multiprocessing as mp

        with mp.Pool(threads) as pool:
            for i, res in enumerate(pool.imap_unordered(_search_worker, chunks)):
                merge(res)
                if progress:
                    progress("pencils %d/%d" % (i + 1, len(chunks)))
    else:
        for i, chunk in enumerate(chunks):
            merge(_search_worker(chunk))
            if progress:
                progress("pencils %d/%d" % (i + 1, len(chunks)))

    diag["finite_raw"] = len(finite)
    finite.update(case2_case3_candidates())
    diag["dedup_prefilter"] = len(finite)

    # Filter: well-formed, quasi-smooth, codimension-2.
    removed = {}
    census = []
    qs_bare = 0
    for w in finite:
        d = sum(w) - 1
        if well_formed_failure(w) is not None:
            removed[w] = "not_well_formed"
            continue
        if not passes_quasi_smooth(w, d, codim2=False):
            removed[w] = "not_quasi_smooth"
            continue
        qs_bare += 1
        if not passes_quasi_smooth(w, d, codim2=True):
            removed[w] = "contains_codim2_stratum"
            continue
        census.append((w, d))
    census.sort()
    diag["qs_bare"] = qs_bare
    diag["census_finite"] = len(census)

    assembled, unmergeable, dropped = assemble_series(pieces)
    diag["pieces"] = len(pieces)
    diag["pieces_dropped"] = dropped
    diag["unmergeable"] = unmergeable

    # The canonical series list comes from the double-anticanonical
    # criterion on triples; the assembled pieces must agree with it on
    # every series that has well-formed members.
    canonical = enumerate_48_triples()
    by_b = {s.b: s for s in assembled}
    series = []
    for b in canonical:
        fam = by_b.pop(b, None) or SeriesFamily(b)
        series.append(fam)
    diag["series_assembled"] = len(assembled)
    diag["series_unmatched_pieces"] = sorted(by_b)
    diag["series_matches_enumeration"] = (
        not by_b
        and [s.b for s in assembled]
        == [s.b for s in series if s.well_formed_members]
    )

    triples = canonical
    sporadic = []
    for w, d in census:
        hit = detect_series_membership(HypersurfaceFamily(w, d), triples)
        if hit is None:
            sporadic.append((w, d))
            continue
        b, k = hit
        if series_removal == "weight2_led":
            drop = k * b[0] >= 2
        elif series_removal == "all_k":
            drop = True
        else:
            drop = k >= 3
        if drop:
            removed[w] = "series_member b=%r k=%d" % (b, k)
        else:
            sporadic.append((w, d))
    diag["sporadic"] = len(sporadic)
    diag["series"] = len(series)
    return StructuredSearchResult(sporadic, series, diag, census, removed)
