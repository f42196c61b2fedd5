import hypothesis.strategies as st

from monres.monomials import minimalize


def multidegrees(n, max_exp=2):
    return st.tuples(*([st.integers(min_value=0, max_value=max_exp)] * n))


@st.composite
def proper_ideals(draw, min_vars=2, max_vars=4, max_gens=3, max_exp=2):
    n = draw(st.integers(min_value=min_vars, max_value=max_vars))
    gens = draw(st.lists(
        multidegrees(n, max_exp).filter(lambda g: any(g)),
        min_size=1, max_size=max_gens))
    return minimalize(n, gens)


@st.composite
def ideal_pairs_strategy(draw, min_vars=2, max_vars=4, max_gens=3, max_exp=2):
    n = draw(st.integers(min_value=min_vars, max_value=max_vars))
    def one():
        gens = draw(st.lists(
            multidegrees(n, max_exp).filter(lambda g: any(g)),
            min_size=1, max_size=max_gens))
        return minimalize(n, gens)
    return one(), one()
