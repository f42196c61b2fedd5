import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from monres.monomials import (
    MonomialIdeal, minimalize, ideal_sum, ideal_intersection, divides,
    mdeg_lcm, mdeg_gcd, mdeg_add, mdeg_sub, subset_lcms,
    candidate_multidegrees, DimensionError, mdeg_str,
)
from tests.conftest import multidegrees, proper_ideals


def test_basic_ops():
    assert mdeg_lcm((1, 0, 2), (0, 3, 1)) == (1, 3, 2)
    assert mdeg_gcd((1, 0, 2), (0, 3, 1)) == (0, 0, 1)
    assert mdeg_add((1, 2), (3, 0)) == (4, 2)
    assert mdeg_sub((3, 2), (1, 2)) == (2, 0)
    with pytest.raises(ValueError):
        mdeg_sub((1, 0), (0, 1))
    with pytest.raises(DimensionError):
        mdeg_lcm((1,), (1, 2))


def test_mdeg_str():
    assert mdeg_str((0, 0)) == "1"
    assert mdeg_str((1, 0, 2)) == "x1*x3^2"


@given(multidegrees(3), multidegrees(3))
def test_lcm_gcd_product(a, b):
    lcm, gcd = mdeg_lcm(a, b), mdeg_gcd(a, b)
    assert mdeg_add(lcm, gcd) == mdeg_add(a, b)
    assert divides(a, lcm) and divides(b, lcm)
    assert divides(gcd, a) and divides(gcd, b)


def test_minimalize():
    I = minimalize(2, [(1, 0), (1, 1), (2, 0), (1, 0)])
    assert I.gens == ((1, 0),)
    assert minimalize(2, []).is_zero
    assert minimalize(2, [(0, 0), (1, 0)]).is_unit


@given(proper_ideals())
def test_minimalize_idempotent(I):
    assert minimalize(I.n, I.gens).gens == I.gens
    for g in I.gens:
        assert not any(h != g and divides(h, g) for h in I.gens)


@given(proper_ideals(max_vars=3), multidegrees(3, max_exp=3))
def test_membership_sum_intersection(I, m):
    m = m[:I.n]
    J = minimalize(I.n, [I.gens[0]])
    S = ideal_sum(I, J)
    N = ideal_intersection(I, J)
    assert S.contains(m) == (I.contains(m) or J.contains(m))
    assert N.contains(m) == (I.contains(m) and J.contains(m))


def test_subset_lcms_and_candidates():
    I = MonomialIdeal.make(2, [(1, 0), (0, 1)])
    assert subset_lcms(I) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    cands = candidate_multidegrees(I)
    assert (1, 1) in cands and (0, 0) in cands
    cap = I.total_lcm()
    assert all(divides(m, cap) for m in cands)
