"""The module containing the calculus on Laurent polynomials.

Methods:
    differentiate(p):
        The derivative d/dx of a Laurent polynomial.
    divide_with_constant_remainder(g, d, tolerance):
        The decomposition g = q d + c with a constant remainder c.
    integrate_over_f(g, f):
        The closed form c_f ln f + c_t ln t + P(t) of the integral of g/f.

"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..config import config
from ..errors import NonElementary, NotDivisible
from ..utils.numbers import Number
from .coordinates import ArrayLike, BaseCoordinate
from .deforming import DeformingFunction
from .laurent import LaurentPoly


def differentiate(p: LaurentPoly) -> LaurentPoly:
    """The derivative dp/dx written in the base coordinate.

    Examples:
        >>> base = BaseCoordinate.exp_neg()
        >>> differentiate(LaurentPoly({1: 1}, base))
        LaurentPoly(-1*t, expneg)

    Args:
        p: The polynomial to differentiate.

    Returns:
        The derivative.

    """
    return p.derivative()


# ================================================
# Division
# ================================================


def _solve_exact(rows: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    """Gauss-Jordan elimination over the rationals; `None` when inconsistent."""
    n_rows, n_cols = len(rows), len(rows[0])
    matrix = [list(row) + [value] for row, value in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        lead = matrix[row][col]
        matrix[row] = [value / lead for value in matrix[row]]
        for r in range(n_rows):
            if r != row and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    if any(matrix[r][-1] != 0 for r in range(row, n_rows)):
        return None
    solution = [Fraction(0)] * n_cols
    for r, col in enumerate(pivots):
        solution[col] = matrix[r][-1]
    return solution


def divide_with_constant_remainder(
    g: LaurentPoly, d: LaurentPoly, tolerance: Optional[float] = None
) -> Tuple[LaurentPoly, Number]:
    """Decomposes g = q d + c with a Laurent polynomial q and a constant c.

    When d is a monomial the constant of g is kept as the remainder, so
    g = 5, d = t gives q = 0 and c = 5.

    Examples:
        >>> base = BaseCoordinate.real_line()
        >>> g = LaurentPoly({0: 3, 2: 9, 4: 6}, base)
        >>> d = LaurentPoly({1: 3, 3: 2}, base)
        >>> divide_with_constant_remainder(g, d)
        (LaurentPoly(3*t, identity), Fraction(3, 1))

    Args:
        g: The dividend.
        d: The divisor, not identically zero.
        tolerance: The residual tolerance when coefficients are floats.
            Defaults to the `float_coefficient_tolerance` setting.

    Raises:
        ValueError: If d is the zero polynomial.
        NotDivisible: If no decomposition exists.

    Returns:
        The quotient q and the constant remainder c.

    """
    if d.is_zero:
        raise ValueError("division by the zero polynomial")
    if d.base != g.base:
        raise ValueError("polynomials live on different base coordinates")
    base = g.base
    if g.is_zero:
        return LaurentPoly.zero(base), Fraction(0)

    if d.is_monomial:
        quotient = g.without_constant() / d
        return quotient, g.constant_term

    glo, ghi = min(g.low_degree, 0), max(g.degree, 0)
    qlo, qhi = glo - d.low_degree, ghi - d.degree
    q_exponents = list(range(qlo, qhi + 1))
    lo = min(glo, qlo + d.low_degree) if q_exponents else glo
    hi = max(ghi, qhi + d.degree) if q_exponents else ghi
    equations = list(range(lo, hi + 1))

    # unknowns: q coefficients followed by the constant c
    rows = []
    for e in equations:
        row = [d.coefficient(e - k) for k in q_exponents]
        row.append(Fraction(1) if e == 0 else Fraction(0))
        rows.append(row)
    rhs = [g.coefficient(e) for e in equations]

    if g.is_exact and d.is_exact:
        solution = _solve_exact(rows, rhs)
        if solution is None:
            raise NotDivisible("no quotient with a constant remainder exists")
    else:
        tolerance = config["float_coefficient_tolerance"] if tolerance is None else tolerance
        matrix = np.array([[float(v) for v in row] for row in rows])
        vector = np.array([float(v) for v in rhs])
        solution, *_ = np.linalg.lstsq(matrix, vector, rcond=None)
        scale = max(1.0, float(np.max(np.abs(vector))))
        if np.max(np.abs(matrix @ solution - vector)) > tolerance * scale:
            raise NotDivisible("no quotient with a constant remainder exists")
        solution = [float(value) for value in solution]

    quotient = LaurentPoly(dict(zip(q_exponents, solution[:-1])), base)
    return quotient, solution[-1]


# ================================================
# Integration
# ================================================


def _log_t_derivative(base: BaseCoordinate) -> LaurentPoly:
    """The derivative d(ln t)/dx as a Laurent polynomial."""
    if base.is_identity:
        return LaurentPoly({-1: 1}, base)
    return LaurentPoly({0: -1}, base)


@dataclass(frozen=True)
class AntiderivativeForm:
    """The closed form F = c_log_f ln f + c_log_t ln t + poly_part of an integral of g/f.

    Attributes:
        c_log_f (Number): The coefficient of ln f.
        c_log_t (Number): The coefficient of ln t.
        poly_part (LaurentPoly): The Laurent polynomial part.
        f (DeformingFunction): The deforming function.

    """

    c_log_f: Number
    c_log_t: Number
    poly_part: LaurentPoly
    f: DeformingFunction

    def evaluate(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        value = self.poly_part.evaluate(x)
        if self.c_log_f != 0:
            value = value + float(self.c_log_f) * self.f.log_value(x)
        if self.c_log_t != 0:
            value = value + float(self.c_log_t) * self.f.base.log_abs_t(x)
        return value

    def derivative_times_f(self) -> LaurentPoly:
        """The product f dF/dx recombined symbolically, which equals the integrand g."""
        f = self.f.poly
        result = f * self.poly_part.derivative()
        result = result + self.c_log_f * self.f.derivative()
        result = result + self.c_log_t * (f * _log_t_derivative(f.base))
        return result


def integrate_over_f(g: LaurentPoly, f: DeformingFunction) -> AntiderivativeForm:
    """The closed form of the integral of g/f dx.

    The integrand is rewritten in t (on t = exp(-x) the measure is dx = -dt/t)
    and split into plain powers of t and powers over f. Powers over f are
    reduced into the window 0 <= k < power, where they integrate to ln f.

    Examples:
        >>> base = BaseCoordinate.half_line()
        >>> f = DeformingFunction.linear(1, base)
        >>> form = integrate_over_f(LaurentPoly({-1: -2, 0: 1}, base), f)
        >>> form.c_log_t, form.c_log_f
        (Fraction(-2, 1), Fraction(3, 1))

    Args:
        g: The numerator.
        f: The deforming function.

    Raises:
        NonElementary: If a term would integrate to an arctangent.

    Returns:
        The antiderivative form.

    """
    if g.base != f.base:
        raise ValueError("polynomials live on different base coordinates")
    base = g.base
    alpha, n = f.alpha, f.power

    # integrand h(t) dt
    h = g if base.is_identity else -(g / LaurentPoly({1: 1}, base))

    plain: Dict[int, Number] = {}
    over_f: Dict[int, Number] = {}
    if f.is_undeformed:
        plain = h.to_dict()
    else:
        over_f = h.to_dict()

    while True:
        high = [k for k, c in over_f.items() if k >= n and c != 0]
        low = [k for k, c in over_f.items() if k < 0 and c != 0]
        if high:
            k = max(high)
            c = over_f.pop(k)
            plain[k - n] = plain.get(k - n, 0) + c / alpha
            over_f[k - n] = over_f.get(k - n, 0) - c / alpha
        elif low:
            k = min(low)
            c = over_f.pop(k)
            plain[k] = plain.get(k, 0) + c
            over_f[k + n] = over_f.get(k + n, 0) - c * alpha
        else:
            break

    c_log_f: Number = Fraction(0)
    if n == 1:
        c_log_f = over_f.get(0, 0) / alpha if over_f.get(0, 0) != 0 else Fraction(0)
    else:
        if over_f.get(0, 0) != 0:
            raise NonElementary("a constant over 1 + alpha x^2 integrates to an arctangent")
        if over_f.get(1, 0) != 0:
            c_log_f = over_f[1] / (2 * alpha)

    c_log_t: Number = Fraction(0)
    poly: Dict[int, Number] = {}
    for k, c in plain.items():
        if c == 0:
            continue
        if k == -1:
            c_log_t = c_log_t + c
        else:
            poly[k + 1] = poly.get(k + 1, 0) + c / (k + 1)

    return AntiderivativeForm(c_log_f, c_log_t, LaurentPoly(poly, base), f)
