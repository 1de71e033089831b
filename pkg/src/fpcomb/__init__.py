"""Workbench for additive combinatorics over prime fields.

Exact arithmetic over F_p, convolutions and discrete Fourier transforms,
additive/multiplicative energies, spectra, invariants of affine equation
families, avoiding-set search and construction, collinear-triple and
non-averaging applications, plus a reproducible experiment harness.
"""

from .errors import (
    AsymmetricP,
    BadOrder,
    BadParameter,
    BudgetExceeded,
    ConfigError,
    EmptyFamily,
    EmptyMass,
    FieldMismatch,
    FpcombError,
    HypothesisViolated,
    InvalidOrder,
    NotInSpectrum,
    ProportionalEquations,
    TooSmall,
    ZeroCoefficient,
    ZeroDilation,
    ZeroInverse,
    ZeroInX,
)
from .field import (
    PrimeField,
    ResidueSet,
    dilate,
    is_prime,
    is_symmetric,
    mod_inverse,
    multiplicative_subgroup,
)
from .harmonic import (
    IntegerProfile,
    SpectrumTable,
    convolve_add,
    convolve_add_iterated,
    convolve_mult,
    correlate_add,
    dft,
    inverse_transform,
    profile_dft,
    sup_norm_nonzero,
)
from .energy import (
    Decomposition,
    EnergyValue,
    additive_energy,
    dilate_level_set,
    energy_star,
    moment_T_k,
    multiplicative_energy,
    pigeonhole_decompose,
    restricted_energy,
    restricted_sigma,
    sigma_k,
    sym_level_set,
)
from .spectral import (
    BoundCheck,
    RatioReport,
    SpectrumParams,
    les_inequality_check,
    spectrum,
    spectrum_mult_energy_report,
    spectrum_size_bound_check,
)
from .families import (
    AffineEquation,
    EquationFamily,
    InvariantResult,
    WitnessSubset,
    brute_force_t,
    brute_force_t_star,
    build_family,
    canonicalize,
    dump_family,
    greedy_t_witness,
    load_family,
    parity_family_equations,
    parse_family,
    ratio_set_size,
    t_invariant,
    t_star_invariant,
    verify_witness,
)
from .avoidance import (
    BOUND_CATALOG,
    BoundCatalogEntry,
    ParityConstruction,
    RegimeEntry,
    SearchResult,
    SolutionCount,
    avoids,
    bound_threshold,
    construct_parity_set,
    count_solutions,
    deviation_regime,
    max_avoiding,
    naive_max_avoiding,
)
from .apps import (
    CollinearStats,
    DeviationReport,
    MixedEnergyReport,
    collinear_deviation,
    collinear_triples,
    has_three_term_progression,
    is_nonaveraging,
    max_nonaveraging,
    mixed_energy_sum,
    naive_max_nonaveraging,
    q_lambda,
    ratio_set,
)
from .reports import (
    SCHEMA_VERSION,
    ExperimentConfig,
    ExperimentReport,
    run_experiment,
    run_verify,
    write_report,
)

__version__ = "0.1.0"

__all__ = [
    "AffineEquation",
    "AsymmetricP",
    "BOUND_CATALOG",
    "BadOrder",
    "BadParameter",
    "BoundCatalogEntry",
    "BoundCheck",
    "BudgetExceeded",
    "CollinearStats",
    "ConfigError",
    "Decomposition",
    "DeviationReport",
    "EmptyFamily",
    "EmptyMass",
    "EnergyValue",
    "EquationFamily",
    "ExperimentConfig",
    "ExperimentReport",
    "FieldMismatch",
    "FpcombError",
    "HypothesisViolated",
    "IntegerProfile",
    "InvalidOrder",
    "InvariantResult",
    "MixedEnergyReport",
    "NotInSpectrum",
    "ParityConstruction",
    "PrimeField",
    "ProportionalEquations",
    "RatioReport",
    "RegimeEntry",
    "ResidueSet",
    "SCHEMA_VERSION",
    "SearchResult",
    "SolutionCount",
    "SpectrumParams",
    "SpectrumTable",
    "TooSmall",
    "WitnessSubset",
    "ZeroCoefficient",
    "ZeroDilation",
    "ZeroInX",
    "ZeroInverse",
    "additive_energy",
    "avoids",
    "bound_threshold",
    "brute_force_t",
    "brute_force_t_star",
    "build_family",
    "canonicalize",
    "collinear_deviation",
    "collinear_triples",
    "construct_parity_set",
    "convolve_add",
    "convolve_add_iterated",
    "convolve_mult",
    "correlate_add",
    "count_solutions",
    "deviation_regime",
    "dft",
    "dilate",
    "dilate_level_set",
    "dump_family",
    "energy_star",
    "greedy_t_witness",
    "has_three_term_progression",
    "inverse_transform",
    "is_nonaveraging",
    "is_prime",
    "is_symmetric",
    "les_inequality_check",
    "load_family",
    "max_avoiding",
    "max_nonaveraging",
    "mixed_energy_sum",
    "mod_inverse",
    "moment_T_k",
    "multiplicative_energy",
    "multiplicative_subgroup",
    "naive_max_avoiding",
    "naive_max_nonaveraging",
    "parity_family_equations",
    "parse_family",
    "pigeonhole_decompose",
    "profile_dft",
    "q_lambda",
    "ratio_set",
    "ratio_set_size",
    "restricted_energy",
    "restricted_sigma",
    "run_experiment",
    "run_verify",
    "sigma_k",
    "spectrum",
    "spectrum_mult_energy_report",
    "spectrum_size_bound_check",
    "sup_norm_nonzero",
    "sym_level_set",
    "t_invariant",
    "t_star_invariant",
    "verify_witness",
]
