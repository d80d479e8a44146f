"""Exact linear forms in zeta(2) and zeta(3), with rigorous numerical checks."""

from ._core import (
    IntegralityError,
    LinearForm,
    beukers_I,
    beukers_J,
    check_ibp,
    contradiction_threshold,
    dn,
    dn_prime_powers,
    i_rs,
    integerize,
    j_rs,
    legendre,
    legendre_rodrigues,
    max_g2,
    max_g3,
    primes,
    run_cli,
    series_abs_In,
    series_Jn,
    verify_chain,
    zeta,
)

__all__ = [
    "IntegralityError",
    "LinearForm",
    "beukers_I",
    "beukers_J",
    "check_ibp",
    "contradiction_threshold",
    "dn",
    "dn_prime_powers",
    "i_rs",
    "integerize",
    "j_rs",
    "legendre",
    "legendre_rodrigues",
    "max_g2",
    "max_g3",
    "primes",
    "run_cli",
    "series_abs_In",
    "series_Jn",
    "verify_chain",
    "zeta",
]
