"""Calabi-Yau and general-type hypersurfaces.

cy_search enumerates well-formed weight systems whose degree-sum
hypersurface is quasi-smooth, in any ambient dimension, inside an explicit
weight box.  Finiteness of the full list is a theorem but comes with no
effective bound, so the cap is a required argument and is reported back in
the result; stability of the count under raising the cap is the practical
completeness check (the n = 3 census holds at 95 weight systems).

cone_extend moves a general-type family (dualizing sheaf O(k), k > 0) to a
Calabi-Yau family by appending k weight-1 coordinates: adding d-th powers
of the new coordinates to the defining polynomial preserves
quasi-smoothness.
"""

from __future__ import annotations

from math import gcd

from .core import HypersurfaceFamily, semigroup_member
from .brute import generic_box_search, BruteResult


class DegreeMismatch(ValueError):
    pass


def _reducibility_guard(weights, d):
    """Reject families where every degree-d monomial involves one fixed
    coordinate (such hypersurfaces split off the hyperplane)."""
    for t in range(len(weights)):
        rest = tuple(a for i, a in enumerate(weights) if i != t)
        if not semigroup_member(rest, d):
            return False
    return True


def cy_search(n: int, max_weight: int, codim2: bool = True) -> BruteResult:
    """Quasi-smooth Calabi-Yau weight systems in dimension n, weights
    bounded by max_weight.  Returns a BruteResult with metadata counters."""
    if n < 2:
        raise ValueError("ambient dimension must be at least 2")
    if max_weight < 1:
        raise ValueError("max_weight must be positive")
    res = generic_box_search((max_weight,) * (n + 1), kind="cy",
                             codim2=codim2)
    kept = []
    guarded = 0
    for w, d in res.records:
        if _reducibility_guard(w, d):
            kept.append((w, d))
        else:
            guarded += 1
    res.records = kept
    res.counters["killed_reducible"] = guarded
    res.counters["max_weight"] = max_weight
    res.counters["dimension"] = n
    return res


def cone_extend(fam: HypersurfaceFamily, k: int) -> HypersurfaceFamily:
    """Append k weight-1 coordinates to a family with d = sum(a) + k.

    k = 0 is the identity.  The construction adds x_new^d summands to the
    defining polynomial, so quasi-smoothness carries over (tested, not
    assumed)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if fam.d != sum(fam.weights) + k:
        raise DegreeMismatch(
            "degree %d != sum(weights) + %d" % (fam.d, k)
        )
    if k == 0:
        return fam
    new_weights = tuple(sorted(fam.weights + (1,) * k))
    return HypersurfaceFamily(new_weights, fam.d)
