"""Gauss-Landau number theory toolkit: gcd/lcm via prime exponents,
Landau's function, permutation orders and seeded verification sweeps."""

from ._core import (
    DomainError,
    asymptotic_table,
    check_distributive_identity,
    check_product_identity,
    cycle_decompose,
    factorize,
    gcd_euclid,
    gcd_lcm,
    is_prime,
    landau_bruteforce,
    landau_dp,
    order,
    partitions,
    primes_up_to,
    reconstruct,
    reduce_ratio,
    run_cli,
    verify_order,
    verify_sweep,
)

__all__ = [
    "DomainError",
    "asymptotic_table",
    "check_distributive_identity",
    "check_product_identity",
    "cycle_decompose",
    "factorize",
    "gcd_euclid",
    "gcd_lcm",
    "is_prime",
    "landau_bruteforce",
    "landau_dp",
    "order",
    "partitions",
    "primes_up_to",
    "reconstruct",
    "reduce_ratio",
    "run_cli",
    "verify_order",
    "verify_sweep",
]
