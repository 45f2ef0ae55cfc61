"""Weight systems and the numerical-semigroup kernel.

A weight system is a tuple of positive integers (a_0, ..., a_n), kept sorted
ascending, describing the weighted projective space P(a_0, ..., a_n).  The
standing well-formedness assumption is that any n of the n+1 weights are
relatively prime.

Everything here is exact integer arithmetic.  Python integers are arbitrary
precision, so intermediate values (degrees beyond 300000, determinants in the
search layer) can never wrap around.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class NotWellFormed(ValueError):
    """Raised when the n weights excluding some index share a common factor."""

    def __init__(self, index: int, common: int):
        self.index = index
        self.common = common
        super().__init__(
            "weights excluding index %d share gcd %d" % (index, common)
        )


def well_formed_failure(weights):
    """Return (i, g) for the first index i whose complement has gcd g > 1.

    Returns None when the weight tuple is well formed, i.e. every n of the
    n+1 weights are relatively prime.
    """
    n1 = len(weights)
    if n1 == 1:
        return None if weights[0] == 1 else (0, weights[0])
    # prefix[i] = gcd of weights[:i], suffix[i] = gcd of weights[i+1:]
    prefix = [0] * (n1 + 1)
    for i, a in enumerate(weights):
        prefix[i + 1] = gcd(prefix[i], a)
    suffix = [0] * (n1 + 1)
    for i in range(n1 - 1, -1, -1):
        suffix[i] = gcd(suffix[i + 1], weights[i])
    for i in range(n1):
        g = gcd(prefix[i], suffix[i + 1])
        if g > 1:
            return i, g
    return None


def is_well_formed(weights) -> bool:
    return well_formed_failure(tuple(weights)) is None


@dataclass(frozen=True)
class WeightSystem:
    """Sorted weights of an ambient weighted projective n-space."""

    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    @property
    def total(self) -> int:
        return sum(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


def canonicalize(raw_weights) -> WeightSystem:
    """Sort the weights ascending and validate well-formedness.

    Rejection is explicit: no silent division by common factors, since the
    lists this engine works with are well formed to begin with.

    >>> canonicalize((2, 1, 1)).weights
    (1, 1, 2)
    """
    ws = tuple(raw_weights)
    if not ws:
        raise ValueError("empty weight list")
    for a in ws:
        if not isinstance(a, int) or a < 1:
            raise ValueError("weights must be positive integers, got %r" % (a,))
    ws = tuple(sorted(ws))
    bad = well_formed_failure(ws)
    if bad is not None:
        raise NotWellFormed(bad[0], bad[1])
    return WeightSystem(ws)


@dataclass(frozen=True)
class HypersurfaceFamily:
    """General hypersurfaces of degree d in P(weights).

    Anticanonically embedded Fano families have d = sum(weights) - 1,
    Calabi-Yau families d = sum(weights), general type d = sum(weights) + k.
    """

    weights: tuple
    d: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    @property
    def kind(self) -> str:
        s = sum(self.weights)
        if self.d == s - 1:
            return "fano"
        if self.d == s:
            return "cy"
        if self.d > s:
            return "general_type"
        return "fano_subanticanonical"


def fano_family(weights) -> HypersurfaceFamily:
    ws = tuple(sorted(weights))
    return HypersurfaceFamily(ws, sum(ws) - 1)


def cy_family(weights) -> HypersurfaceFamily:
    ws = tuple(sorted(weights))
    return HypersurfaceFamily(ws, sum(ws))


def degree(exponents, weights) -> int:
    """Weighted degree of the monomial x^exponents: sum of b_i * a_i."""
    if len(exponents) != len(weights):
        raise ValueError("exponent vector length %d != weight count %d"
                         % (len(exponents), len(weights)))
    total = 0
    for b, a in zip(exponents, weights):
        if b < 0:
            raise ValueError("negative exponent %d" % b)
        total += b * a
    return total


# ---------------------------------------------------------------------------
# Numerical semigroup membership.
#
# semigroup_member(gens, t) decides whether t = sum b_j * g_j has a solution
# in nonnegative integers.  This is the innermost primitive of every
# quasi-smoothness test and is called millions of times during a census run,
# so the cheap cases are peeled off first:
#   * t == 0 (empty monomial), single generator (divisibility),
#   * a generator equal to 1,
#   * two generators (classical closed form mod g_0),
# and only then a reachability table over 0..t, realised as a Python integer
# bitmask so the closure runs at C speed.
# ---------------------------------------------------------------------------

_member_cache = {}


def clear_semigroup_cache():
    _member_cache.clear()


def _pair_member(p: int, q: int, t: int) -> bool:
    # p, q coprime here, p >= 2.  Smallest beta >= 0 with q*beta == t mod p.
    beta = (t * pow(q, -1, p)) % p
    return q * beta <= t


def semigroup_member(gens, target: int) -> bool:
    """Is target a nonnegative integer combination of the generators?"""
    if target == 0:
        return True
    if target < 0:
        return False
    if not gens:
        return False
    key = (gens if isinstance(gens, tuple) else tuple(gens), target)
    hit = _member_cache.get(key)
    if hit is not None:
        return hit
    gens_s = sorted(set(key[0]))
    g = 0
    for a in gens_s:
        g = gcd(g, a)
    if target % g:
        _member_cache[key] = False
        return False
    if g > 1:
        gens_s = [a // g for a in gens_s]
        target //= g
    if gens_s[0] == 1:
        _member_cache[key] = True
        return True
    gens_s = [a for a in gens_s if a <= target]
    if not gens_s:
        _member_cache[key] = False
        return False
    if len(gens_s) == 1:
        res = target % gens_s[0] == 0
    elif len(gens_s) == 2:
        p, q = gens_s
        h = gcd(p, q)
        res = target % h == 0 and _pair_member(p // h, q // h, target // h)
    else:
        # Any pair reaching the target settles it early.
        res = False
        for i in range(len(gens_s)):
            for j in range(i, len(gens_s)):
                p, q = gens_s[i], gens_s[j]
                h = gcd(p, q)
                if target % h == 0 and _pair_member(p // h, q // h, target // h):
                    res = True
                    break
            if res:
                break
        if not res:
            # Reachability over 0..target as a bitmask: bit v set iff v is
            # representable.  For each generator, saturate by doubling shifts.
            mask = (1 << (target + 1)) - 1
            reach = 1
            for a in gens_s:
                prev = 0
                while reach != prev:
                    prev = reach
                    reach |= (reach << a) & mask
            res = (reach >> target) & 1 == 1
    _member_cache[key] = res
    return res


def semigroup_witness(gens, target: int):
    """An exponent vector over gens summing to target, or None.

    Slow path, used only when an explicit monomial is wanted for a report.
    """
    gens = tuple(gens)
    if target == 0:
        return (0,) * len(gens)
    if not semigroup_member(gens, target):
        return None
    expo = [0] * len(gens)
    rest = target
    # Greedy with backtracking via membership queries on the remaining tail.
    changed = True
    while rest > 0 and changed:
        changed = False
        for i, a in enumerate(gens):
            while rest >= a and semigroup_member(gens[i:], rest - a):
                expo[i] += 1
                rest -= a
                changed = True
    return tuple(expo) if rest == 0 else None
