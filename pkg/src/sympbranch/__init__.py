"""Exact modular representation combinatorics for symplectic groups:
composition factors and submodule posets of fundamental Weyl modules,
branching to the rank below, dimensions, and inductive systems."""

from .branching import (
    RestrictionStructure,
    b_coeff,
    branch_omega,
    branch_pi,
    d_submodule_count,
    eps,
    is_completely_reducible,
    restriction_structure,
)
from .dims import (
    check_branch_dims,
    check_filtration_identity,
    dims_table,
    irr_dim,
    irr_dim_pi,
    weyl_dim,
    weyl_dim_pi,
)
from .inductive import (
    FamilySpec,
    branch_set,
    classify_truncation,
    family_level,
    first_closure_failure,
    is_R_inductive,
    r_catalogue,
    verify_family,
)
from .labels import LabelMultiset, OmegaLabel, PiLabel
from .padic import (
    PAdicDigits,
    Prime,
    bar,
    binom_mod_p,
    contains,
    d_coeff,
    digit,
    lp,
    to_digits,
)
from .selftest import Failure, run_selftest
from .weyl import (
    AdmissibleTuple,
    FactorPoset,
    IdealCapExceeded,
    QSet,
    apply_tuple,
    factors_lucas,
    factors_reflections,
    is_irreducible,
    order_ideals,
    q_set,
    reflection,
    reflection_admissible,
    sigma_max,
    socle_factor,
    submodule_ideals,
    tuple_admissible,
    tuple_of_factor,
)

__version__ = "0.1.0"
