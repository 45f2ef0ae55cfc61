import random

import pytest

from wfano.core import (NotWellFormed, canonicalize, degree, fano_family,
                        is_well_formed, semigroup_member, semigroup_witness)


def naive_member(gens, target):
    """Bounded exhaustive oracle: enumerate exponents up to target/g."""
    gens = [g for g in gens if g <= target]
    if target == 0:
        return True
    if not gens:
        return False
    g = gens[0]
    return any(naive_member(gens[1:], target - k * g)
               for k in range(target // g + 1))


def test_canonicalize_sorts():
    assert canonicalize((2, 1, 1)).weights == (1, 1, 2)


def test_canonicalize_extreme_tuple():
    ws = canonicalize((18792, 407, 547, 5311, 12528))
    assert ws.weights == (407, 547, 5311, 12528, 18792)


def test_canonicalize_rejects_shared_factor():
    with pytest.raises(NotWellFormed) as err:
        canonicalize((1, 2, 2, 2, 2))
    assert err.value.index == 0
    assert err.value.common == 2


def test_canonicalize_idempotent():
    rng = random.Random(7)
    for _ in range(300):
        ws = tuple(rng.randint(1, 30) for _ in range(5))
        try:
            first = canonicalize(ws)
        except NotWellFormed:
            continue
        assert canonicalize(first.weights).weights == first.weights


def test_canonicalize_input_validation():
    with pytest.raises(ValueError):
        canonicalize(())
    with pytest.raises(ValueError):
        canonicalize((1, 0, 2))


def test_semigroup_examples():
    assert semigroup_member((18792,), 37584)  # x_4^2 of the extreme tuple
    assert semigroup_member((5,), 0)
    assert semigroup_member((2, 3), 7)
    assert not semigroup_member((4, 6), 9)


def test_semigroup_against_naive_oracle():
    rng = random.Random(1)
    for _ in range(400):
        k = rng.randint(1, 4)
        gens = tuple(sorted(rng.randint(1, 20) for _ in range(k)))
        target = rng.randint(0, 200)
        assert semigroup_member(gens, target) == naive_member(list(gens), target), \
            (gens, target)


def test_semigroup_monotone_in_generators():
    rng = random.Random(2)
    for _ in range(300):
        gens = tuple(sorted(rng.randint(2, 25) for _ in range(3)))
        target = rng.randint(0, 150)
        if semigroup_member(gens, target):
            bigger = tuple(sorted(gens + (rng.randint(1, 25),)))
            assert semigroup_member(bigger, target)


def test_semigroup_witness_reconstructs():
    rng = random.Random(3)
    for _ in range(100):
        gens = tuple(sorted(rng.randint(2, 15) for _ in range(3)))
        target = rng.randint(0, 80)
        w = semigroup_witness(gens, target)
        if semigroup_member(gens, target):
            assert w is not None
            assert sum(b * g for b, g in zip(w, gens)) == target
        else:
            assert w is None


def test_degree_paper_monomials():
    assert degree((1301, 0, 1, 0, 0), (223, 9101, 46837, 112320, 168480)) == 336960
    assert degree((91, 1, 0, 0, 0), (407, 547, 5311, 12528, 18792)) == 37584
    assert degree((0, 0, 0, 0, 0), (1, 2, 3, 4, 5)) == 0


def test_degree_linear():
    rng = random.Random(4)
    ws = (3, 5, 7, 11, 13)
    for _ in range(100):
        b1 = tuple(rng.randint(0, 9) for _ in range(5))
        b2 = tuple(rng.randint(0, 9) for _ in range(5))
        s = tuple(x + y for x, y in zip(b1, b2))
        assert degree(s, ws) == degree(b1, ws) + degree(b2, ws)


def test_degree_validates():
    with pytest.raises(ValueError):
        degree((1, 2), (1, 2, 3))
    with pytest.raises(ValueError):
        degree((1, -1, 0), (1, 2, 3))


def test_fano_family_degree_relation():
    fam = fano_family((2, 3, 4, 5, 7))
    assert fam.d == sum(fam.weights) - 1
    assert fam.kind == "fano"


def test_is_well_formed():
    assert is_well_formed((1, 1, 2, 2, 2))
    assert not is_well_formed((1, 2, 2, 2, 2))
    assert is_well_formed((407, 547, 5311, 12528, 18792))
