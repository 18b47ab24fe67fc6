"""Pythagorean triples, n-tuples and chains via the hypotenuse-gap method."""

from .chains import BranchKind, Chain, ChainStrategy, Mode, build_chains, classify_chain, extend
from .errors import (
    BudgetExceeded,
    DomainError,
    InvalidDelta,
    MagnitudeExceeded,
    OracleCapExceeded,
    PytupleError,
)
from .numeric import Factorization, divisors_below, factorize, gcd_all, is_perfect_square, is_prime
from .triples import (
    ClassFilter,
    Kind,
    Triple,
    TripleForecast,
    all_triples,
    euclid_generate,
    forecast_counts,
    oracle_triples,
    predict_primitive_deltas,
    triple_from_delta,
    valid_deltas,
)
from .tuples import (
    FeasibilityReport,
    Reason,
    TupleSolution,
    all_completions,
    complete_tuple,
    feasibility,
    oracle_completions,
    predict_primitive_deltas_tuple,
    sum_of_squares,
    valid_deltas_for,
)

__version__ = "0.1.0"
