from hypothesis import given, settings

from monres.monomials import MonomialIdeal
from monres.complexes import subset_label
from monres.constructions import taylor
from monres.scarf import scarf
from monres.dg import (
    taylor_product, gen_taylor_product, double_star_product,
    double_star_product_many, degree_one_action, degree_one_axioms,
    leibniz_lift_product, verify_dg,
)
from tests.conftest import proper_ideals, ideal_pairs_strategy


def _find(C, indices):
    want = subset_label(indices)
    for i in range(0, C.max_hdeg + 1):
        for b in C.basis(i):
            if b.label == want:
                return b.id
    raise AssertionError("no basis element with label %r" % (want,))


@given(proper_ideals())
@settings(max_examples=25, deadline=None)
def test_taylor_product_is_dg(I):
    T = taylor_product(taylor(I))
    rep = verify_dg(T.complex, T)
    assert rep.all_ok, str(rep)
    assert T.is_multigraded()


@given(ideal_pairs_strategy(max_gens=2))
@settings(max_examples=20, deadline=None)
def test_fold_product_is_dg(pair):
    I, J = pair
    tables = [taylor_product(taylor(K)) for K in (I, J)]
    T, S = gen_taylor_product(tables)
    rep = verify_dg(S, T)
    assert rep.all_ok, str(rep)
    assert T.is_multigraded()


@given(ideal_pairs_strategy(max_gens=2))
@settings(max_examples=15, deadline=None)
def test_double_star_product_is_dg(pair):
    I, J = pair
    FT = taylor_product(taylor(I))
    GT = taylor_product(taylor(J))
    table, info = double_star_product(FT, GT)
    assert info["report"].all_ok, str(info["report"])
    assert info["star_report"].all_ok
    assert not info["residuals"]


def test_double_star_fold_three_factors():
    ideals = [MonomialIdeal.make(3, [g]) for g in
              [(1, 1, 0), (0, 1, 1), (1, 0, 1)]]
    tables = [taylor_product(taylor(I)) for I in ideals]
    acc = double_star_product_many(tables)
    rep = verify_dg(acc.complex, acc)
    assert rep.all_ok, str(rep)


@given(ideal_pairs_strategy(max_gens=2))
@settings(max_examples=15, deadline=None)
def test_degree_one_action_axioms(pair):
    I, J = pair
    FT = taylor_product(taylor(I))
    GT = taylor_product(taylor(J))
    products, info = degree_one_action(FT, GT)
    assert info["axioms_ok"], str(info["witness"])
    assert not info["residuals"]


def test_taylor_product_satisfies_degree_one_axioms():
    I = MonomialIdeal.make(3, [(1, 1, 0), (0, 1, 1)])
    T = taylor_product(taylor(I))
    ok, wit = degree_one_axioms(T.complex, T.products)
    assert ok, str(wit)


def test_leibniz_lift_on_path_scarf():
    # the lifted product on the Scarf complex of (x1x2, x2x3, x3x4)
    # recovers g0.g2 = x4 t{0,1} + x1 t{1,2} up to a global sign
    I = MonomialIdeal.make(4, [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)])
    C = scarf(I)
    T = leibniz_lift_product(C)
    rep = verify_dg(C, T)
    assert rep.all_ok, str(rep)
    a = _find(C, (0,))
    c = _find(C, (2,))
    sc = dict(T.structure_constants(a, c))
    ab = _find(C, (0, 1))
    bc = _find(C, (1, 2))
    assert set(sc) == {ab, bc}
    one = C.field.one
    assert {abs(sc[ab]), abs(sc[bc])} == {one}
    # same parity: both terms carry the same sign
    assert sc[ab] == sc[bc]
