"""Characteristic-one algebra, Witt coefficients and F_1 counting functions."""

from ._char1 import *  # noqa: F401,F403
from ._char1 import AccuracyError, DomainError, PreconditionError, ResourceError, ValidationError  # noqa: F401

__version__ = "0.1.0"

# y^2 + y = x^3 - x^2 - 10x - 20
CURVE_11A = [0, -1, 1, -10, -20]
