"""Python bindings for the linnik toolkit."""

from ._core import (
    Params,
    bv_sum,
    bv_sum_exact,
    chi,
    crt_l,
    decompose,
    discrepancy,
    discrepancy_rows,
    euler_phi,
    f_enveloping,
    lemma,
    lemma_ids,
    linnik_constant,
    murty_sum,
    prime_count,
    primes_up_to,
    r_two_squares,
    r_via_identity,
    run_cli,
    split_r_by_ranges,
    sum_r_shifted_primes,
    theta0,
)

__all__ = [
    "Params",
    "bv_sum",
    "bv_sum_exact",
    "chi",
    "crt_l",
    "decompose",
    "discrepancy",
    "discrepancy_rows",
    "euler_phi",
    "f_enveloping",
    "lemma",
    "lemma_ids",
    "linnik_constant",
    "murty_sum",
    "prime_count",
    "primes_up_to",
    "r_two_squares",
    "r_via_identity",
    "run_cli",
    "split_r_by_ranges",
    "sum_r_shifted_primes",
    "theta0",
]
