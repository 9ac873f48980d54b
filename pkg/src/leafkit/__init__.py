"""Exact differential algebra on polynomial rings.

Differential ideals and their trajectories, invariant open sets, projective
vector fields from matrices, and extension of constant fractions, over QQ or
GF(p), with certificates that can be replayed.
"""

from .algebra import (
    GF,
    QQ,
    Derivation,
    HasseSchmidtDerivation,
    Poly,
    Ring,
    apply_derivation,
    apply_derivation_iter,
    hs_apply,
    hs_from_derivation,
    poly_arith,
)
from .constants import (
    ConstantJets,
    FractionSection,
    JetRing,
    constants_comparison_report,
    extend_constant,
    is_constant_fraction,
    validate_kovacic_section,
    verify_lemma_4_3,
    verify_prop_4_2,
    verify_theta_lemma,
)
from .differential import (
    BOUNDED,
    EXACT,
    DiffIdealClosureResult,
    TrajectoryResult,
    diff_closure,
    functoriality_check,
    hs_trajectory,
    is_differential_ideal,
    is_hs_invariant,
    trajectory,
)
from .groebner import (
    Ideal,
    elimination_ideal,
    groebner_basis,
    ideal_intersect,
    ideal_membership,
    lift,
    normal_form,
    preimage,
    radical_membership,
    saturation,
)
from .schemes import (
    AffineDiffScheme,
    OpenSet,
    ProjectiveVectorField,
    cf_topology_laws,
    greatest_invariant_closed,
    is_invariant_open,
    is_leaf,
    make_affine,
    projective_field_from_matrix,
    projective_rational_leaves,
    u_delta,
)

__version__ = "0.1.0"
