"""Exact derivative polynomials for tan, tanh, sec, sech (and cot, coth, csch).

Coefficients come from Stirling numbers of the second kind; the same
polynomials give Bernoulli, Euler and tangent numbers, the Eisenstein series
as polynomials in e_1, the polygamma reflection formula, and closed forms for
a few integrals against sech.
"""

from .analytic import (
    EisensteinExpansion,
    digamma,
    eisenstein_direct,
    eisenstein_expansion,
    eisenstein_tail_bound,
    family_derivative,
    hurwitz_zeta,
    polygamma,
    reflection_rhs,
)
from .combinat import (
    bernoulli,
    euler_number,
    stirling2,
    stirling_row,
    tangent_number,
    tanh_center_value,
)
from .errors import (
    ComplexResidue,
    ConvergenceError,
    DomainError,
    NonIntegerResult,
    PoleError,
)
from .exact import GaussRational, Poly, Rational
from .polyfamilies import (
    FamilyResult,
    PolyFamily,
    center_value,
    family_next_oracle,
    family_poly,
    general_poly,
    geometric_poly,
)

__version__ = "0.1.0"
