"""The module containing the number helpers.

Coefficients are exact `Fraction`s whenever the inputs are rational and fall
back to `float` once an irrational value (such as a non-square root) enters.

Methods:
    to_number(value):
        Converts a user value into a Fraction or a float.
    exact_sqrt(value):
        The positive square root, exact for rational squares.
    double_factorial(n):
        The double factorial with (-1)!! = 0!! = 1.
    binomial(n, k):
        The binomial coefficient, zero outside 0 <= k <= n.
    is_exact(value):
        Whether the value is an exact rational.
    format_number(value, digits):
        The canonical string of a number.

"""

import math
from fractions import Fraction
from typing import Union

Number = Union[Fraction, float]


def to_number(value: Union[Number, int, str]) -> Number:
    """Converts a user value into a Fraction or a float.

    Examples:
        >>> to_number("3/4")
        Fraction(3, 4)
        >>> to_number(0.5)
        0.5

    Args:
        value: An int, a Fraction, a float or a string of a rational.

    Returns:
        A Fraction for ints, Fractions and rational strings, a float otherwise.

    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite number: {value}")
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as error:
            raise ValueError(f"not a rational number: {value!r}") from error
    raise TypeError(f"unsupported number type: {type(value).__name__}")


def is_exact(value: Number) -> bool:
    return isinstance(value, (Fraction, int))


def _exact_root(n: int):
    root = math.isqrt(n)
    return root if root * root == n else None


def exact_sqrt(value: Number) -> Number:
    """The positive square root, exact for squares of rationals.

    Examples:
        >>> exact_sqrt(Fraction(9, 4))
        Fraction(3, 2)
        >>> exact_sqrt(Fraction(2))
        1.4142135623730951

    Args:
        value: A nonnegative number.

    Returns:
        A Fraction when the value is the square of a rational, a float otherwise.

    """
    if value < 0:
        raise ValueError(f"square root of a negative number: {value}")
    if is_exact(value):
        value = Fraction(value)
        num = _exact_root(value.numerator)
        den = _exact_root(value.denominator)
        if num is not None and den is not None:
            return Fraction(num, den)
    return math.sqrt(value)


def double_factorial(n: int) -> int:
    """The double factorial n!!.

    Examples:
        >>> double_factorial(5)
        15
        >>> double_factorial(-1)
        1

    Args:
        n: An integer not smaller than -1.

    Returns:
        The product n (n-2) (n-4) ... down to 1 or 2.

    """
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def format_number(value: Number, digits: int = 12) -> str:
    """The canonical string of a number.

    Exact values print as reduced fractions, floats with `digits` significant digits.

    Examples:
        >>> format_number(Fraction(-101, 4))
        '-101/4'
        >>> format_number(2.0 / 3.0, 4)
        '0.6667'

    Args:
        value: The number to format.
        digits: The significant digits of floats.

    Returns:
        The string representation.

    """
    if is_exact(value):
        return str(Fraction(value))
    formatted = f"{float(value):.{digits}g}"
    return "0" if formatted == "-0" else formatted
