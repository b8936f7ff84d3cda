"""The module containing the deforming functions f of the position dependent mass."""

from dataclasses import dataclass

import numpy as np

from ..errors import UnsupportedDeformation
from ..utils.numbers import Number, to_number
from .coordinates import ArrayLike, BaseCoordinate
from .laurent import LaurentPoly


@dataclass(frozen=True)
class DeformingFunction:
    """The deforming function f = 1 + alpha t^power.

    The admitted shapes are 1 + alpha x^2 (on the real or half line), 1 + alpha x
    (on the half line) and 1 + alpha exp(-x). A zero alpha gives the undeformed f = 1.

    Examples:
        >>> from pdmqes.symbolic import BaseCoordinate, DeformingFunction
        >>> f = DeformingFunction.quadratic(1, BaseCoordinate.real_line())
        >>> f.poly
        LaurentPoly(1 + t^2, identity)

    Attributes:
        alpha (Number): The deformation parameter.
        power (int): The exponent of t in f.
        base (BaseCoordinate): The base coordinate.

    """

    alpha: Number
    power: int
    base: BaseCoordinate

    def __post_init__(self):
        object.__setattr__(self, "alpha", to_number(self.alpha))
        if self.alpha < 0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha}")
        if self.base.is_identity:
            if self.power == 1 and self.base.x_domain[0] != 0.0:
                raise UnsupportedDeformation("f = 1 + alpha x is only positive on the half line")
            if self.power not in (1, 2):
                raise UnsupportedDeformation(f"unsupported power {self.power} of f on the identity base")
        elif self.power != 1:
            raise UnsupportedDeformation(f"unsupported power {self.power} of f on the exponential base")

    @classmethod
    def quadratic(cls, alpha: Number, base: BaseCoordinate) -> "DeformingFunction":
        return cls(alpha, 2, base)

    @classmethod
    def linear(cls, alpha: Number, base: BaseCoordinate) -> "DeformingFunction":
        return cls(alpha, 1, base)

    @property
    def is_undeformed(self) -> bool:
        return self.alpha == 0

    @property
    def poly(self) -> LaurentPoly:
        return LaurentPoly({0: 1, self.power: self.alpha}, self.base)

    def derivative(self) -> LaurentPoly:
        return self.poly.derivative()

    def second_derivative(self) -> LaurentPoly:
        return self.poly.derivative().derivative()

    def evaluate(self, x: ArrayLike) -> np.ndarray:
        return self.poly.evaluate(x)

    def log_value(self, x: ArrayLike) -> np.ndarray:
        """The logarithm ln f(x) without overflow at large |x|."""
        x = np.asarray(x, dtype=float)
        if self.is_undeformed:
            return np.zeros_like(x)
        log_t = self.base.log_abs_t(x)
        return np.logaddexp(0.0, np.log(float(self.alpha)) + self.power * log_t)
