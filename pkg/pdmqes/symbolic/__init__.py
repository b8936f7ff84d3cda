"""The module containing the `symbolic` core.

Exact arithmetic over Laurent polynomials in a base coordinate t(x), together
with the differential and integral calculus the supersymmetric relations need.

Classes:
    BaseCoordinate: The base coordinate t(x) and its domain.
    LaurentPoly: A Laurent polynomial in the base coordinate.
    DeformingFunction: The deforming function f = 1 + alpha t^n.
    AntiderivativeForm: The closed form of an integral of g/f.

Methods:
    differentiate(p):
        The derivative d/dx of a Laurent polynomial.
    divide_with_constant_remainder(g, d):
        The decomposition g = q d + c.
    integrate_over_f(g, f):
        The closed form of the integral of g/f.

"""

from .coordinates import BaseCoordinate
from .laurent import LaurentPoly
from .deforming import DeformingFunction
from .calculus import (
    AntiderivativeForm,
    differentiate,
    divide_with_constant_remainder,
    integrate_over_f,
)

__all__ = [
    "BaseCoordinate",
    "LaurentPoly",
    "DeformingFunction",
    "AntiderivativeForm",
    "differentiate",
    "divide_with_constant_remainder",
    "integrate_over_f",
]
