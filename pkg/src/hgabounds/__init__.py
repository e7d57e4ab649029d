"""Sharp and simple bounds among weighted harmonic, geometric and arithmetic means."""

from .applications import (
    PolynomialCoeffs,
    SymmetricMatrix,
    factor_trace_det,
    fransen_lohne_lower,
    reverse_upper,
    trace_inverse_upper_bound,
    verify_polynomial_bounds,
    verify_trace_bound,
)
from .errors import (
    DefinitenessError,
    DegenerateInputError,
    DomainError,
    FormatError,
    HGAError,
    InfeasibleMeansError,
    OracleError,
    ValidationError,
)
from .kernels import f_kernel, gamma_sign, phi_squared, s_function
from .means import MeanTriple, WeightedSample, compute_means, min_weight, normalize, reciprocal_dual
from .oracle import OracleReport, random_feasible_search, two_value_search, verify_sharpness
from .sharp import (
    BoundInterval,
    RootPair,
    arithmetic_bounds,
    extremal_configuration,
    geometric_bounds,
    harmonic_bounds,
    solve_f_equation,
    solve_phi_equation,
)
from .simple import (
    SimpleBoundReport,
    improvement_threshold,
    improves_over_trivial,
    simple_arithmetic_upper,
    simple_geometric_interval,
    simple_harmonic_lower,
)

__version__ = "0.1.0"
