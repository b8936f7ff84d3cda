"""The module containing the supersymmetric partner construction.

Classes:
    SusyPair: A superpotential with its two partner potentials.
    GeneratingPair: The generating functions of two consecutive hierarchy steps.

Methods:
    riccati_v1(W, f):
        The potential W^2 - f dW/dx.
    partner_v2(W, f):
        The potential W^2 + f dW/dx.
    susy_pair(W, f, E0):
        Builds the partner pair of a superpotential.
    effective_potential_bdd(V, f):
        The BenDaniel-Duke effective potential.
    generating_pair_from_wplus(Wplus, f):
        The generating pair of a sum W+ = W' + W.
    superpotentials_from_generating(gp):
        The superpotentials W and W' of a generating pair.

"""

from dataclasses import dataclass
from typing import Tuple

from ..errors import IncompatibleGenerator, NonPositiveGap, NotDivisible
from ..symbolic import DeformingFunction, LaurentPoly, divide_with_constant_remainder
from ..utils.numbers import Number


# ================================================
# Partner Potentials
# ================================================


def riccati_v1(W: LaurentPoly, f: DeformingFunction) -> LaurentPoly:
    """The first partner potential V1 = W^2 - f dW/dx.

    Examples:
        >>> base = BaseCoordinate.real_line()
        >>> f = DeformingFunction.quadratic(1, base)
        >>> riccati_v1(LaurentPoly({3: 1}, base), f)
        LaurentPoly(-3*t^2 - 3*t^4 + t^6, identity)

    Args:
        W: The superpotential.
        f: The deforming function.

    Returns:
        The potential V1 = V - E0.

    """
    return W * W - f.poly * W.derivative()


def partner_v2(W: LaurentPoly, f: DeformingFunction) -> LaurentPoly:
    """The second partner potential V2 = W^2 + f dW/dx."""
    return W * W + f.poly * W.derivative()


@dataclass(frozen=True)
class SusyPair:
    """A superpotential with its partner potentials.

    Attributes:
        W (LaurentPoly): The superpotential.
        f (DeformingFunction): The deforming function.
        V1 (LaurentPoly): The potential W^2 - f dW/dx.
        V2 (LaurentPoly): The potential W^2 + f dW/dx.
        E0 (Number): The ground state energy, V = V1 + E0.

    """

    W: LaurentPoly
    f: DeformingFunction
    V1: LaurentPoly
    V2: LaurentPoly
    E0: Number

    @property
    def V(self) -> LaurentPoly:
        return self.V1 + self.E0


def susy_pair(W: LaurentPoly, f: DeformingFunction, E0: Number) -> SusyPair:
    return SusyPair(W, f, riccati_v1(W, f), partner_v2(W, f), E0)


def effective_potential_bdd(V: LaurentPoly, f: DeformingFunction) -> LaurentPoly:
    """The BenDaniel-Duke effective potential V - f f''/2 - f'^2/4.

    Examples:
        >>> base = BaseCoordinate.half_line()
        >>> effective_potential_bdd(LaurentPoly({2: 1}, base), DeformingFunction.linear(1, base))
        LaurentPoly(-1/4 + t^2, identity)

    """
    first = f.derivative()
    return V - f.poly * f.second_derivative() / 2 - first * first / 4


# ================================================
# Generating Functions
# ================================================


@dataclass(frozen=True)
class GeneratingPair:
    """The generating functions of two consecutive hierarchy steps.

    The pair satisfies f dW+/dx = W+ W- + gap with gap = E1 - E0 > 0.

    Attributes:
        Wplus (LaurentPoly): The sum W' + W.
        Wminus (LaurentPoly): The difference W' - W.
        gap (Number): The energy gap E1 - E0.

    """

    Wplus: LaurentPoly
    Wminus: LaurentPoly
    gap: Number

    def __post_init__(self):
        if self.gap <= 0:
            raise NonPositiveGap(f"the energy gap must be positive, got {self.gap}")


def generating_pair_from_wplus(Wplus: LaurentPoly, f: DeformingFunction) -> GeneratingPair:
    """The complementary generating function W- and the gap of W+.

    The product f dW+/dx is divided by W+, the remainder being the gap.

    Examples:
        >>> base = BaseCoordinate.real_line()
        >>> f = DeformingFunction.quadratic(1, base)
        >>> pair = generating_pair_from_wplus(LaurentPoly({1: 3, 3: 2}, base), f)
        >>> pair.Wminus, pair.gap
        (LaurentPoly(3*t, identity), Fraction(3, 1))

    Args:
        Wplus: The generating function, not identically zero.
        f: The deforming function.

    Raises:
        IncompatibleGenerator: If no constant-remainder division exists.
        NonPositiveGap: If the remainder is not positive.

    Returns:
        The generating pair.

    """
    if Wplus.is_zero:
        raise ValueError("the generating function must not vanish")
    try:
        Wminus, gap = divide_with_constant_remainder(f.poly * Wplus.derivative(), Wplus)
    except NotDivisible as error:
        raise IncompatibleGenerator(str(error)) from error
    return GeneratingPair(Wplus, Wminus, gap)


def superpotentials_from_generating(gp: GeneratingPair) -> Tuple[LaurentPoly, LaurentPoly]:
    """The superpotentials W = (W+ - W-)/2 and W' = (W+ + W-)/2."""
    return (gp.Wplus - gp.Wminus) / 2, (gp.Wplus + gp.Wminus) / 2
