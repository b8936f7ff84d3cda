"""The module containing the exact Laurent polynomial ring.

A LaurentPoly is a finite sum of c_k t^k over a base coordinate t(x), with
coefficients kept as Fractions or floats. Products, derivatives in x and
division with a constant remainder stay within the ring.

Classes:
    LaurentPoly: A Laurent polynomial in a base coordinate.

"""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

import numpy as np

from ..utils.numbers import Number, format_number, is_exact, to_number
from .coordinates import ArrayLike, BaseCoordinate

Scalar = Union[Number, int]


class LaurentPoly:
    """A Laurent polynomial in the base coordinate t.

    The coefficients are exact Fractions when built from rationals and floats
    otherwise. Zero coefficients are never stored. Instances are immutable.

    Examples:
        >>> from pdmqes.symbolic import BaseCoordinate, LaurentPoly
        >>> base = BaseCoordinate.real_line()
        >>> p = LaurentPoly({1: 3, 3: 2}, base)
        >>> p.derivative()
        LaurentPoly(3 + 6*t^2, identity)

    Attributes:
        base (BaseCoordinate): The base coordinate.

    """

    __slots__ = ("_coeffs", "base")

    def __init__(self, coeffs: Optional[Mapping[int, Scalar]], base: BaseCoordinate):
        if not isinstance(base, BaseCoordinate):
            raise TypeError("base must be a BaseCoordinate")
        cleaned: Dict[int, Number] = {}
        for exponent, value in (coeffs or {}).items():
            if int(exponent) != exponent:
                raise ValueError(f"non-integer exponent: {exponent}")
            value = to_number(value)
            if value != 0:
                cleaned[int(exponent)] = value
        object.__setattr__(self, "_coeffs", cleaned)
        object.__setattr__(self, "base", base)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ================================================
    # Constructors
    # ================================================

    @classmethod
    def constant(cls, value: Scalar, base: BaseCoordinate) -> "LaurentPoly":
        return cls({0: value}, base)

    @classmethod
    def monomial(cls, exponent: int, value: Scalar, base: BaseCoordinate) -> "LaurentPoly":
        return cls({exponent: value}, base)

    @classmethod
    def zero(cls, base: BaseCoordinate) -> "LaurentPoly":
        return cls({}, base)

    # ================================================
    # Inspection
    # ================================================

    def coefficient(self, exponent: int) -> Number:
        return self._coeffs.get(exponent, Fraction(0))

    def items(self) -> Iterator[Tuple[int, Number]]:
        """Iterates over the (exponent, coefficient) pairs in ascending exponent order."""
        for exponent in sorted(self._coeffs):
            yield exponent, self._coeffs[exponent]

    def to_dict(self) -> Dict[int, Number]:
        return dict(self._coeffs)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    @property
    def degree(self) -> Optional[int]:
        """The highest exponent, `None` for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    @property
    def low_degree(self) -> Optional[int]:
        """The lowest exponent, `None` for the zero polynomial."""
        return min(self._coeffs) if self._coeffs else None

    @property
    def constant_term(self) -> Number:
        return self.coefficient(0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_constant(self) -> bool:
        return all(exponent == 0 for exponent in self._coeffs)

    @property
    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    @property
    def is_exact(self) -> bool:
        return all(is_exact(value) for value in self._coeffs.values())

    def without_constant(self) -> "LaurentPoly":
        return LaurentPoly({k: c for k, c in self._coeffs.items() if k != 0}, self.base)

    # ================================================
    # Arithmetic
    # ================================================

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.base != self.base:
                raise ValueError("polynomials live on different base coordinates")
            return other
        if isinstance(other, (int, float, Fraction)) and not isinstance(other, bool):
            return LaurentPoly.constant(other, self.base)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        coeffs = dict(self._coeffs)
        for exponent, value in other._coeffs.items():
            coeffs[exponent] = coeffs.get(exponent, 0) + value
        return LaurentPoly(coeffs, self.base)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._coeffs.items()}, self.base)

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        coeffs: Dict[int, Number] = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                coeffs[k1 + k2] = coeffs.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(coeffs, self.base)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if not other.is_monomial:
                raise TypeError("only division by scalars and monomials is supported")
            (exponent, value), = other.items()
            return LaurentPoly({k - exponent: c / value for k, c in self._coeffs.items()}, self.base)
        value = to_number(other)
        if value == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return LaurentPoly({k: c / value for k, c in self._coeffs.items()}, self.base)

    def __pow__(self, power: int) -> "LaurentPoly":
        if not isinstance(power, int) or power < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = LaurentPoly.constant(1, self.base)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other) if not isinstance(other, LaurentPoly) else other
        if other is NotImplemented:
            return NotImplemented
        return self.base == other.base and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.base, frozenset(self._coeffs.items())))

    # ================================================
    # Calculus
    # ================================================

    def derivative(self) -> "LaurentPoly":
        """The derivative d/dx through the chain rule of the base coordinate.

        On t = x the rule is d(t^k)/dx = k t^(k-1), on t = exp(-x) it is -k t^k.

        Returns:
            The derivative as a Laurent polynomial in the same base.

        """
        if self.base.is_identity:
            return LaurentPoly({k - 1: k * c for k, c in self._coeffs.items()}, self.base)
        return LaurentPoly({k: -k * c for k, c in self._coeffs.items()}, self.base)

    # ================================================
    # Numerics
    # ================================================

    def evaluate_t(self, t: ArrayLike) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        result = np.zeros_like(t)
        for exponent, value in self._coeffs.items():
            result = result + float(value) * np.power(t, float(exponent))
        return result

    def evaluate(self, x: ArrayLike) -> np.ndarray:
        """Evaluates the polynomial at x (vectorised over numpy arrays).

        Examples:
            >>> p = LaurentPoly({2: 1}, BaseCoordinate.real_line())
            >>> float(p.evaluate(3.0))
            9.0

        Args:
            x: The points of the x domain.

        Returns:
            The values at the points.

        """
        return self.evaluate_t(self.base.t_of_x(x))

    def max_abs_difference(self, other: "LaurentPoly") -> float:
        difference = self - other
        return max((abs(float(c)) for c in difference._coeffs.values()), default=0.0)

    def almost_equal(self, other: "LaurentPoly", tolerance: float) -> bool:
        return self.max_abs_difference(other) <= tolerance

    # ================================================
    # Serialization
    # ================================================

    def to_json(self, digits: int = 12) -> Dict[str, str]:
        """The JSON map {exponent: coefficient string}."""
        return {str(k): format_number(c, digits) for k, c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, Union[str, float, int]], base: BaseCoordinate) -> "LaurentPoly":
        coeffs = {}
        for exponent, value in data.items():
            if isinstance(value, str) and any(char in value.lower() for char in ".e"):
                value = float(value)
            coeffs[int(exponent)] = value
        return cls(coeffs, base)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for exponent, value in self.items():
            if exponent == 0:
                terms.append(f"{value}")
            elif exponent == 1:
                terms.append(f"{value}*t" if value != 1 else "t")
            else:
                terms.append(f"{value}*t^{exponent}" if value != 1 else f"t^{exponent}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self}, {self.base.kind})"
