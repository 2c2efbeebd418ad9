"""Exact computation with permutation ideals in preprojective algebras of
type A and their continuous, permuton-indexed analogues."""

from .continuous import (
    Certificate,
    DecorousQuot,
    DecorousSub,
    PermutonIdeal,
    d_sub,
    discretize,
    finite_vs_continuous,
    hom_vanishing_cert,
    ideal_leq,
    ideal_summand,
    is_full,
    is_zero_sub,
    left_act,
    member,
    member_quot,
    staircase,
    tau_rigidity_cert,
    u_quot,
)
from .finite import (
    CurveModule,
    DiamondCurve,
    HomLengths,
    Kind,
    QuiverRep,
    bottom_boundary,
    factors,
    hom_dim,
    hom_lengths,
    ideal_of,
    ideal_via_word,
    is_tau_rigid_ideal,
    is_zero,
    projective,
    random_curve,
    simple_rep,
    strip,
    tau_sub,
    to_rep,
    top_boundary,
    top_removable,
)
from .permuton import (
    GridPermuton,
    boundary_function,
    cdf,
    from_perm,
    permuton_bruhat_leq,
    refine,
    uniform,
)
from .plfunc import (
    BFunc,
    MonotoneClass,
    PLFunc,
    equivalent_mod_shift,
    is_lipschitz1,
    monotone_class,
    pointwise_leq,
    pointwise_max,
    pointwise_min,
    to_bfunc,
    vshift,
)
from .sheets import (
    SawtoothDesc,
    Sheet,
    SimpleModule,
    b_interval,
    codependence_class,
    cone_contains,
    decorous_cover,
    delta_fn,
    elementary_exists,
    generators,
    in_range_of_codependence,
    is_brick,
    is_deep,
    is_deep_sheet,
    is_sawtooth,
    is_zero_sheet,
    sawtooth_rep,
    sheet_new,
    sheet_support,
)
from .symgroup import (
    Perm,
    all_reduced_words,
    apply_word,
    bruhat_leq,
    canonical_reduced_word_of_rep,
    is_reduced,
    length,
    min_coset_rep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
