"""Twisted von Mangoldt sums, residue main terms, and RH-normalized remainders.

Thin wrapper over the C++ core; see the individual function docstrings.
"""

from ._core import (
    ArithTable,
    LaurentSeries,
    TwistRecord,
    ZeroTable,
    alpha_laurent,
    digamma,
    dirichlet_convolve,
    dirichlet_identity_check,
    lambda_conv_power,
    lambda_generalized,
    lambda_generalized_oracle,
    load_table,
    load_zeros,
    main_term,
    main_term_closed_k2,
    natural_log_table,
    polygamma,
    prefix_scan,
    residue_basis,
    saloni_check,
    save_table,
    scan,
    sieve_moebius,
    sieve_von_mangoldt,
    stieltjes_constants,
    twisted_sum,
    zero_sum_linear,
    zero_sum_power,
    zeta_derivatives,
    zeta_laurent,
)

__all__ = [
    "ArithTable",
    "LaurentSeries",
    "TwistRecord",
    "ZeroTable",
    "alpha_laurent",
    "digamma",
    "dirichlet_convolve",
    "dirichlet_identity_check",
    "lambda_conv_power",
    "lambda_generalized",
    "lambda_generalized_oracle",
    "load_table",
    "load_zeros",
    "main_term",
    "main_term_closed_k2",
    "natural_log_table",
    "polygamma",
    "prefix_scan",
    "residue_basis",
    "saloni_check",
    "save_table",
    "scan",
    "sieve_moebius",
    "sieve_von_mangoldt",
    "stieltjes_constants",
    "twisted_sum",
    "zero_sum_linear",
    "zero_sum_power",
    "zeta_derivatives",
    "zeta_laurent",
]

__version__ = "0.1.0"
