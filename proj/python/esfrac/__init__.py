"""Unit-fraction decompositions of m/n: exact searches, exception sieves and bound audits."""

from ._esfrac import (  # noqa: F401
    bound_report,
    classify_triple,
    count_primes,
    coverage_counts,
    divisor_constant_audit,
    divisor_profile,
    enumerate_decompositions,
    exceptional_prime_in,
    exceptional_prime_threshold,
    exceptions_up_to,
    factorize,
    find_decomposition,
    is_prime,
    jk_threshold_scan,
    run_cli,
    sums_to,
    t_exact,
    type1_search,
    type1_triple,
    type2_search,
    type2_triple,
    vaughan_f,
)

__all__ = [name for name in dir() if not name.startswith("_")]
