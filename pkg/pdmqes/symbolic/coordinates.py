"""The module containing the base coordinates t(x) of the Laurent polynomials."""

import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from ..constants import BASE_KIND

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class BaseCoordinate:
    """The base coordinate t(x) in which all polynomials are written.

    Examples:
        >>> from pdmqes.symbolic import BaseCoordinate
        >>> base = BaseCoordinate.exp_neg()
        >>> float(base.t_of_x(0.0))
        1.0

    Attributes:
        kind (str): Either `BASE_KIND.IDENTITY` (t = x) or `BASE_KIND.EXPNEG` (t = exp(-x)).
        x_domain (Tuple[float, float]): The open x interval, infinite ends as `math.inf`.

    """

    kind: str
    x_domain: Tuple[float, float]

    def __post_init__(self):
        x1, x2 = self.x_domain
        if self.kind == BASE_KIND.IDENTITY:
            if (x1, x2) not in ((-math.inf, math.inf), (0.0, math.inf)):
                raise ValueError(f"identity base admits (-inf, inf) or (0, inf), got {self.x_domain}")
        elif self.kind == BASE_KIND.EXPNEG:
            if (x1, x2) != (-math.inf, math.inf):
                raise ValueError(f"exponential base admits (-inf, inf) only, got {self.x_domain}")
        else:
            raise ValueError(f"unknown base kind: {self.kind}")

    # ================================================
    # Constructors
    # ================================================

    @classmethod
    def real_line(cls) -> "BaseCoordinate":
        return cls(BASE_KIND.IDENTITY, (-math.inf, math.inf))

    @classmethod
    def half_line(cls) -> "BaseCoordinate":
        return cls(BASE_KIND.IDENTITY, (0.0, math.inf))

    @classmethod
    def exp_neg(cls) -> "BaseCoordinate":
        return cls(BASE_KIND.EXPNEG, (-math.inf, math.inf))

    # ================================================
    # Properties
    # ================================================

    @property
    def is_identity(self) -> bool:
        return self.kind == BASE_KIND.IDENTITY

    @property
    def is_symmetric(self) -> bool:
        """Whether the domain is the real line in t = x."""
        return self.is_identity and self.x_domain[0] == -math.inf

    @property
    def reference_point(self) -> float:
        """The gauge point of unnormalized wavefunctions (1 on the half line, 0 otherwise)."""
        return 1.0 if self.x_domain[0] == 0.0 else 0.0

    # ================================================
    # Evaluation
    # ================================================

    def contains(self, x: ArrayLike) -> Union[bool, np.ndarray]:
        x1, x2 = self.x_domain
        x = np.asarray(x, dtype=float)
        return (x > x1) & (x < x2)

    def t_of_x(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return x if self.is_identity else np.exp(-x)

    def log_abs_t(self, x: ArrayLike) -> np.ndarray:
        """The logarithm ln|t(x)|, exact for large |x| on the exponential base."""
        x = np.asarray(x, dtype=float)
        if self.is_identity:
            with np.errstate(divide="ignore"):
                return np.log(np.abs(x))
        return -x

    def chain_factor(self, t: ArrayLike) -> np.ndarray:
        """The derivative dt/dx written in terms of t."""
        t = np.asarray(t, dtype=float)
        return np.ones_like(t) if self.is_identity else -t
