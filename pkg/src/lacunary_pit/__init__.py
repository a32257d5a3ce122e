"""Deterministic identity testing for lacunary expressions

    f(X) = sum_j c_j X^alpha_j (a + b X)^beta_j

with rational c_j, a, b and arbitrarily large natural exponents.
"""

from .cyclo import CycloElement, eval_expression_mod
from .expression import Expression, SizeGuardError, Term
from .hitting import (C_DEFAULT, GapConstant, HittingSetSpec, build_real_hitting_set,
                      build_rou_hitting_set, delta, prime_count_bound)
from .oracle import SparsePoly, expand_to_sparse, random_eval_mod, real_root_count
from .tester import (Refutation, Verdict, blackbox_zero_test, gap_split,
                     lower_bound_params, normalize, real_point_zero_test,
                     refute_representation, structural_zero_test)

__all__ = [
    "C_DEFAULT", "CycloElement", "Expression", "GapConstant", "HittingSetSpec",
    "Refutation", "SizeGuardError", "SparsePoly", "Term", "Verdict",
    "blackbox_zero_test", "build_real_hitting_set", "build_rou_hitting_set",
    "delta", "eval_expression_mod", "expand_to_sparse", "gap_split",
    "lower_bound_params", "normalize", "prime_count_bound", "random_eval_mod",
    "real_point_zero_test", "real_root_count", "refute_representation",
    "structural_zero_test",
]
