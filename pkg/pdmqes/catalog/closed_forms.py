"""The tabulated closed forms of the extension families.

The builders in `families` derive everything from the generating functions.
The formulas here are the independent closed forms of the potential
coefficients, the two energies and the oscillator partner, used to cross-check
the constructed instances.

"""

from fractions import Fraction
from typing import Optional, Tuple

from ..constants import FAMILY
from ..errors import InvalidParams
from ..symbolic import BaseCoordinate, LaurentPoly
from ..utils.numbers import Number, binomial, double_factorial, exact_sqrt, to_number


def s_sum(m: int, k: int, a: int, b: int) -> Fraction:
    """The double-factorial sum S^(m,k)_(a,b) of the oscillator coefficients.

    Examples:
        >>> s_sum(1, 2, 0, 1)
        Fraction(3, 1)

    Args:
        m: The extension index.
        k: The coefficient index.
        a: The first summation index.
        b: The last summation index (inclusive).

    Returns:
        The sum over l = a..b of [(2m+1)!!]^2 divided by
        (2l+1)!! (2k-2l-1)!! (2m-2l)!! (2m-2k+2l+2)!!.

    """
    top = double_factorial(2 * m + 1) ** 2
    total = Fraction(0)
    for l in range(a, b + 1):
        total += Fraction(
            top,
            double_factorial(2 * l + 1)
            * double_factorial(2 * k - 2 * l - 1)
            * double_factorial(2 * m - 2 * l)
            * double_factorial(2 * m - 2 * k + 2 * l + 2),
        )
    return total


def _ratio(m: int) -> Fraction:
    return Fraction(double_factorial(2 * m + 1), double_factorial(2 * m))


def _morse_delta(alpha: Number, B2minus: Number) -> Number:
    return exact_sqrt(4 * B2minus + alpha**2)


def _require(name: str, value: Optional[Number]) -> Number:
    if value is None:
        raise InvalidParams(f"{name} is required")
    return to_number(value)


# ================================================
# Potential Coefficients
# ================================================


def _ho_coefficients(m: int, alpha: Number, B: Number) -> dict:
    root = exact_sqrt(B)
    ratio = _ratio(m)
    coeffs = {
        2: Fraction(2 * m + 1, 2) * Fraction(2 * m + 3, 2) * alpha**2
        - 2 * (2 * m + 1) * ratio * alpha ** (1 - m) * root
        + ratio**2 * alpha ** (-2 * m) * B
    }
    for k in range(2, m + 2):
        coeffs[2 * k] = (
            -2
            * (2 * m + 1)
            * Fraction(double_factorial(2 * m + 1), double_factorial(2 * k - 1) * double_factorial(2 * m - 2 * k + 2))
            * alpha ** (k - m)
            * root
            + s_sum(m, k, 0, k - 1) * alpha ** (k - 2 * m - 1) * B
        )
    for k in range(m + 2, 2 * m + 1):
        coeffs[2 * k] = s_sum(m, k, k - m - 1, m) * alpha ** (k - 2 * m - 1) * B
    coeffs[4 * m + 2] = B
    return coeffs


def _rho_coefficients(m: int, alpha: Number, L: Number, B: Number) -> dict:
    root = exact_sqrt(B)
    coeffs = {
        -2: L * (L + 1),
        2: Fraction(2 * m + 1, 2) * Fraction(2 * m + 3, 2) * alpha**2
        - Fraction(m + 1, 2) * (2 * m * L + 9 * m + 4) * alpha ** (1 - m) * root
        + (m + 1) ** 2 * alpha ** (-2 * m) * B,
    }
    for k in range(2, m + 2):
        coeffs[2 * k] = (
            -(binomial(m + 1, k + 1) * (2 * L + 2 * k + 3) + binomial(m + 1, k) * (2 * m + 2 * k))
            * alpha ** (k - m)
            * root
            + (binomial(2 * m + 2, k + 1) - 2 * binomial(m + 1, k + 1)) * alpha ** (k - 1 - 2 * m) * B
        )
    for k in range(m + 2, 2 * m + 1):
        coeffs[2 * k] = binomial(2 * m + 2, k + 1) * alpha ** (k - 1 - 2 * m) * B
    coeffs[4 * m + 2] = B
    return coeffs


def _kc_coefficients(m: int, alpha: Number, L: Number, B: Number) -> dict:
    root = exact_sqrt(B)
    coeffs = {
        -2: L * (L + 1),
        -1: 2 * alpha * (L + 1) * ((m + 1) * L + 2 * m + 1),
        1: -Fraction(2, 3) * m * (m + 1) * (2 * m + 1) * (L + 2) * alpha ** (2 - m) * root,
    }
    for k in range(2, m + 1):
        coeffs[k] = (
            -(
                binomial(m + 1, k + 2) * (2 * L + k + 3)
                + binomial(m + 1, k + 1) * ((2 * m + 2) * L + 4 * m + k + 3)
            )
            * alpha ** (k - m + 1)
            * root
            + (
                binomial(2 * m + 2, k + 2)
                - 2 * binomial(m + 1, k + 2)
                - 2 * (m + 1) * binomial(m + 1, k + 1)
            )
            * alpha ** (k - 2 * m)
            * B
        )
    for k in range(m + 1, 2 * m):
        coeffs[k] = binomial(2 * m + 2, k + 2) * alpha ** (k - 2 * m) * B
    coeffs[2 * m] = B
    return coeffs


def _morse_coefficients(m: int, alpha: Number, B2minus: Number, B: Number) -> dict:
    """Coefficients keyed by the power of t = exp(-x), so B_k of exp(kx) sits at -k."""
    root = exact_sqrt(B)
    Delta = _morse_delta(alpha, B2minus)
    labels = {
        -2: B2minus,
        -1: (alpha + Delta) * ((3 * m + 1) * alpha + (m + 1) * Delta) / (2 * alpha),
        1: -Fraction(1, 3) * m * (m + 1) * (2 * m + 1) * (3 * alpha + Delta) * alpha ** (m - 2) * root,
    }
    for k in range(2, m + 1):
        labels[k] = (
            -(
                ((k + 2) * binomial(m + 1, k + 2) + (3 * m + k + 2) * binomial(m + 1, k + 1)) * alpha
                + (binomial(m + 1, k + 2) + (m + 1) * binomial(m + 1, k + 1)) * Delta
            )
            * alpha ** (m - k - 1)
            * root
            + (
                binomial(2 * m + 2, k + 2)
                - 2 * binomial(m + 1, k + 2)
                - 2 * (m + 1) * binomial(m + 1, k + 1)
            )
            * alpha ** (2 * m - k)
            * B
        )
    for k in range(m + 1, 2 * m):
        labels[k] = binomial(2 * m + 2, k + 2) * alpha ** (2 * m - k) * B
    labels[2 * m] = B
    return {-k: value for k, value in labels.items()}


def published_parameters(
    family: str,
    m: int,
    alpha: Number,
    B_top: Number,
    L: Optional[Number] = None,
    B2minus: Optional[Number] = None,
) -> LaurentPoly:
    """The tabulated potential of an extension, without constant term.

    Examples:
        >>> published_parameters("kc", 1, 1, 1, L=1)
        LaurentPoly(2*t^-2 + 20*t^-1 - 12*t + t^2, identity)

    Args:
        family: One of `FAMILY.ALL`.
        m: The extension index.
        alpha: The deformation parameter.
        B_top: The top coefficient.
        L: The angular parameter (RHO and KC).
        B2minus: The coefficient B^2 of exp(-2x) (Morse).

    Raises:
        InvalidParams: If the family is unknown or a parameter is missing.

    Returns:
        The potential as a Laurent polynomial in the family's base coordinate.

    """
    alpha, B_top = to_number(alpha), to_number(B_top)
    if family == FAMILY.HO:
        return LaurentPoly(_ho_coefficients(m, alpha, B_top), BaseCoordinate.real_line())
    if family == FAMILY.RHO:
        return LaurentPoly(_rho_coefficients(m, alpha, _require("L", L), B_top), BaseCoordinate.half_line())
    if family == FAMILY.KC:
        return LaurentPoly(_kc_coefficients(m, alpha, _require("L", L), B_top), BaseCoordinate.half_line())
    if family == FAMILY.MORSE:
        coeffs = _morse_coefficients(m, alpha, _require("B2minus", B2minus), B_top)
        return LaurentPoly(coeffs, BaseCoordinate.exp_neg())
    raise InvalidParams(f"unknown family: {family}")


# ================================================
# Energies
# ================================================


def published_energies(
    family: str,
    m: int,
    alpha: Number,
    B_top: Number,
    L: Optional[Number] = None,
    B2minus: Optional[Number] = None,
) -> Tuple[Number, Number]:
    """The tabulated ground and first excited state energies.

    Examples:
        >>> published_energies("rho", 1, 1, 1, L=1)
        (Fraction(9, 2), Fraction(65, 2))

    """
    alpha, B_top = to_number(alpha), to_number(B_top)
    root = exact_sqrt(B_top)
    if family == FAMILY.HO:
        half = Fraction(2 * m + 1, 2) * alpha
        scale = _ratio(m) * alpha ** (-m) * root
        return -half + scale, -half + 3 * scale
    if family == FAMILY.RHO:
        L = _require("L", L)
        scale = (m + 1) * alpha ** (-m) * root
        E0 = -(2 * m * L + 3 * m + Fraction(1, 2)) * alpha + (2 * L + 3) * scale
        E1 = ((2 * m + 4) * L + 3 * m + Fraction(11, 2)) * alpha + (2 * L + 7) * scale
        return E0, E1
    if family == FAMILY.KC:
        L = _require("L", L)
        scale = Fraction(m * (m + 1), 2) * alpha ** (1 - m) * root
        E0 = -(((m + 1) * L + 2 * m + Fraction(3, 2)) ** 2) * alpha**2 + (2 * L + 3) * scale
        E1 = -(((m + 1) * L + m + Fraction(3, 2)) ** 2) * alpha**2 + (2 * L + 7) * scale
        return E0, E1
    if family == FAMILY.MORSE:
        Delta = _morse_delta(alpha, _require("B2minus", B2minus))
        scale = Fraction(m * (m + 1), 2) * alpha ** (m - 1) * root
        E0 = -((m + 1) * Delta / alpha + 3 * m + 2) ** 2 / 4 + (2 * alpha + Delta) * scale
        E1 = -((m + 1) * Delta / alpha + m + 2) ** 2 / 4 + (6 * alpha + Delta) * scale
        return E0, E1
    raise InvalidParams(f"unknown family: {family}")


# ================================================
# Oscillator Partner
# ================================================


def published_partner(m: int, alpha: Number, B_top: Number) -> Tuple[LaurentPoly, Number]:
    """The oscillator partner V2 = V1 + 2 f dW/dx as coefficients B' and constant R.

    Examples:
        >>> published_partner(1, 1, 1)
        (LaurentPoly(3*t^2 + 3*t^4 + t^6, identity), Fraction(0, 1))

    """
    alpha, B = to_number(alpha), to_number(B_top)
    ratio = _ratio(m)
    coeffs = {2: Fraction(2 * m - 1, 2) * Fraction(2 * m + 1, 2) * alpha**2 + ratio**2 * alpha ** (-2 * m) * B}
    for k in range(2, m + 2):
        coeffs[2 * k] = s_sum(m, k, 0, k - 1) * alpha ** (k - 2 * m - 1) * B
    for k in range(m + 2, 2 * m + 2):
        coeffs[2 * k] = s_sum(m, k, k - m - 1, m) * alpha ** (k - 2 * m - 1) * B
    R = -Fraction(2 * m + 1, 2) * alpha + ratio * alpha ** (-m) * exact_sqrt(B)
    return LaurentPoly(coeffs, BaseCoordinate.real_line()), R
