"""Multigraded free complexes for families of monomial ideals."""

__version__ = "0.1.0"

from .fields import Field, QQ, field_from_name
from .monomials import (
    MonomialIdeal, minimalize, ideal_sum, ideal_intersection,
    mdeg_lcm, mdeg_gcd, mdeg_add, mdeg_sub, divides,
)
from .complexes import (
    MultigradedComplex, BasisElement, verify, minimize, is_minimal,
    ranks_table, BettiTable, stratum_homology,
)
from .constructions import (
    taylor, taylor_over, gen_taylor, gen_taylor_many, truncate,
    double_star, double_star_many, minimal_resolution, quasitransverse,
    resolves_by_strata,
)
from .scarf import scarf, gen_scarf, is_quasiscarf, ScarfReport
from .dg import (
    ProductTable, taylor_product, gen_taylor_product, double_star_product,
    double_star_product_many, degree_one_action, degree_one_axioms,
    leibniz_lift_product, verify_dg,
)
from .koszul import (
    koszul_homology, expected_form, kunneth_rescaled,
    intersection_homology_map, golod_injectivity, h1_product_vanishing,
    massey_condition, resolution_cycles, CycleBasis, HypothesesUnmet,
)
from .files import parse_ideal_file, IdealFile, ParseError, save_complex, load_complex
