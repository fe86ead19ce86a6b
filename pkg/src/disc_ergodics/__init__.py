"""Iteration of analytic self-maps of the unit disc and mean ergodicity of
the composition operators they induce."""

from .symbols import (
    Blaschke,
    Moebius,
    Orbit,
    Polynomial,
    SelfMapReport,
    Symbol,
    SymbolError,
    SymbolParseError,
    Taylor,
    iterate,
    make_automorphism,
    moebius_inverse,
    moebius_product,
    parse_symbol,
    self_map_check,
    serialize_symbol,
    symbol_to_json,
)
from .dynamics import (
    BoundaryPeriodicPoint,
    ContractionReport,
    DWResult,
    EllipticAutomorphism,
    EllipticInputError,
    HyperbolicDW,
    Identity,
    ImageCircle,
    InteriorDW,
    NonConvergenceError,
    ParabolicDW,
    SymbolClass,
    UnclassifiableError,
    angular_derivative,
    boundary_periodic_points,
    classify,
    denjoy_wolff,
    local_contraction_check,
    moebius_fixed_points,
    moebius_image_circle,
    sup_norm_iterate,
    sup_norm_sequence,
)
from .ergodicity import (
    CesaroTrace,
    DensityEstimate,
    ErgodicityVerdict,
    GapWitness,
    HalfPointWitness,
    Monomial,
    MonomialMean,
    TaylorFn,
    TestFunction,
    VerdictBudgets,
    WeylReport,
    boundary_gap_witness,
    cesaro_apply,
    cesaro_final_means,
    cesaro_orbit_mean,
    density_sweep,
    monomial_mean,
    orbit_density,
    rotation_cesaro_limit,
    verdict,
    weyl_test,
)
from .weighted import (
    BudgetExceededError,
    CoefficientNormReport,
    CounterexamplePair,
    LacunarySequence,
    SparseSeries,
    StandardWeight,
    VAlpha,
    Weight,
    brute_force_error_table,
    convergent_denominators,
    counterexample_pair,
    h2_norm_sq,
    lacunary_exponents,
    make_weight_v_alpha,
    weighted_sup_norm,
)
from .gallery import (
    BOUNDARY_DW_NAMES,
    GALLERY_NAMES,
    NON_ELLIPTIC_NAMES,
    gallery_document,
    gallery_symbol,
    gallery_symbols,
)

__version__ = "0.1.0"
