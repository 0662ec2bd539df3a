"""Exact generalized multi poly-Bernoulli polynomials and identity checks.

Rational values are returned as fractions.Fraction; inputs may be int,
Fraction or "p/q" strings.
"""

from ._core import (
    bernoulli_number,
    hurwitz_polynomials,
    identity_ids,
    imatomi_numbers,
    li_weights,
    multi_poly_bernoulli,
    multi_poly_bernoulli_explicit,
    multi_poly_bernoulli_polys,
    phi_weights,
    reduced_multi_poly_bernoulli,
    run_cli,
    stirling2,
    symmetrized,
    verify,
    whitney1,
    whitney2,
)

__all__ = [
    "bernoulli_number",
    "hurwitz_polynomials",
    "identity_ids",
    "imatomi_numbers",
    "li_weights",
    "multi_poly_bernoulli",
    "multi_poly_bernoulli_explicit",
    "multi_poly_bernoulli_polys",
    "phi_weights",
    "reduced_multi_poly_bernoulli",
    "run_cli",
    "stirling2",
    "symmetrized",
    "verify",
    "whitney1",
    "whitney2",
]
