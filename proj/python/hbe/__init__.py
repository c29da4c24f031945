"""Exact verification of harmonic-number and central binomial identities.

Rational results come back as fractions.Fraction. Values in the span of
1, ln2, ln2^2 and pi^2 come back as dicts with one Fraction per basis
element plus a rendered "text" and a "float" approximation.
"""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, OutOfSpan, PoleError, SingularSystem  # noqa: F401

__version__ = "0.1.0"
