"""Solution counts outside a base locus via randomized saturation."""

from ._core import (
    SCHEMA_VERSION,
    SaturaError,
    SaturaTimeout,
    compute_gi,
    discriminant_degree_bound,
    gi_table,
    groebner_basis,
    hilbert_function,
    hilbert_table,
    jde_dimension,
    lm_agreement,
    min_prime_exponent,
    nu_upper_bound,
    problem_names,
    run_trials,
)

__all__ = [
    "SCHEMA_VERSION",
    "SaturaError",
    "SaturaTimeout",
    "compute_gi",
    "discriminant_degree_bound",
    "gi_table",
    "groebner_basis",
    "hilbert_function",
    "hilbert_table",
    "jde_dimension",
    "lm_agreement",
    "min_prime_exponent",
    "nu_upper_bound",
    "problem_names",
    "run_trials",
]
