"""The exactly solvable starting potentials of the extension families.

Classes:
    StartingPotential: A deformed potential with a fully known bound state spectrum.

Methods:
    es_energy(sp, n):
        The n-th bound state energy.
    es_level_count(sp):
        The number of bound states, `math.inf` for confining potentials.
    starting_potential_poly(sp):
        The potential, deforming function and superpotential as Laurent polynomials.
    reduce_to_start(family, V, alpha):
        Identifies the couplings of an m = 0 shaped potential.

"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..constants import FAMILY
from ..errors import AboveNmax, InvalidParams
from ..symbolic import BaseCoordinate, DeformingFunction, LaurentPoly
from ..utils.numbers import Number, exact_sqrt, to_number


@dataclass(frozen=True)
class StartingPotential:
    """A deformed exactly solvable potential.

    The couplings in use depend on the family: omega for HO and RHO, Q for KC
    and (A, B) for Morse. The angular parameter L applies to RHO and KC.

    Examples:
        >>> sp = StartingPotential.ho(omega=1, alpha=1)
        >>> sp.Delta
        1.4142135623730951

    Attributes:
        family (str): One of `FAMILY.ALL`.
        alpha (Number): The deformation parameter, zero for the constant mass limit.
        omega (Optional[Number]): The oscillator frequency.
        Q (Optional[Number]): The Coulomb coupling.
        A (Optional[Number]): The Morse shape parameter.
        B (Optional[Number]): The Morse depth parameter.
        L (Optional[Number]): The angular parameter.

    """

    family: str
    alpha: Number
    omega: Optional[Number] = None
    Q: Optional[Number] = None
    A: Optional[Number] = None
    B: Optional[Number] = None
    L: Optional[Number] = None

    def __post_init__(self):
        for name in ("alpha", "omega", "Q", "A", "B", "L"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, to_number(value))
        if self.alpha < 0:
            raise InvalidParams("alpha must be ≥ 0")
        if self.family in (FAMILY.HO, FAMILY.RHO) and (self.omega is None or self.omega <= 0):
            raise InvalidParams("omega must be > 0")
        elif self.family == FAMILY.KC and (self.Q is None or self.Q <= 0):
            raise InvalidParams("Q must be > 0")
        elif self.family == FAMILY.MORSE:
            if self.A is None or self.A <= 0 or self.B is None or self.B <= 0:
                raise InvalidParams("A and B must be > 0")
        elif self.family not in FAMILY.ALL:
            raise InvalidParams(f"unknown family: {self.family}")
        if self.family in (FAMILY.RHO, FAMILY.KC) and (self.L is None or self.L < Fraction(-1, 2)):
            raise InvalidParams("L must be ≥ -1/2")

    # ================================================
    # Constructors
    # ================================================

    @classmethod
    def ho(cls, omega: Number, alpha: Number) -> "StartingPotential":
        return cls(FAMILY.HO, alpha, omega=omega)

    @classmethod
    def rho(cls, omega: Number, alpha: Number, L: Number) -> "StartingPotential":
        return cls(FAMILY.RHO, alpha, omega=omega, L=L)

    @classmethod
    def kc(cls, Q: Number, alpha: Number, L: Number) -> "StartingPotential":
        return cls(FAMILY.KC, alpha, Q=Q, L=L)

    @classmethod
    def morse(cls, A: Number, B: Number, alpha: Number) -> "StartingPotential":
        return cls(FAMILY.MORSE, alpha, A=A, B=B)

    # ================================================
    # Derived Parameters
    # ================================================

    @property
    def Delta(self) -> Optional[Number]:
        """sqrt(omega^2 + alpha^2) for the oscillators, sqrt(4 B^2 + alpha^2) for Morse."""
        if self.family in (FAMILY.HO, FAMILY.RHO):
            return exact_sqrt(self.omega**2 + self.alpha**2)
        if self.family == FAMILY.MORSE:
            return exact_sqrt(4 * self.B**2 + self.alpha**2)
        return None

    @property
    def lam(self) -> Optional[Number]:
        """The linear superpotential coefficient (HO and Morse)."""
        if self.family == FAMILY.HO:
            return (self.alpha + self.Delta) / 2
        if self.family == FAMILY.MORSE:
            return -(self.alpha + self.Delta) / 2
        return None

    @property
    def mu(self) -> Number:
        """The second superpotential coefficient (RHO, KC and Morse)."""
        if self.family == FAMILY.RHO:
            return (self.alpha + self.Delta) / 2
        if self.family == FAMILY.KC:
            return (self.Q - self.alpha * (self.L + 1)) / (2 * (self.L + 1))
        if self.family == FAMILY.MORSE:
            return -(self.B * (2 * self.A + 1) / self.lam + 1) / 2
        return None


# ================================================
# Spectra
# ================================================


def _admits_level(sp: StartingPotential, n: int) -> bool:
    if sp.family == FAMILY.KC:
        return sp.alpha * (n**2 + (sp.L + 1) * (2 * n + 1)) < sp.Q
    width = 2 * abs(sp.lam)
    return n * (width + n * sp.alpha) < width * sp.mu


def _n_max(sp: StartingPotential) -> Optional[int]:
    """The highest bound level of a finite spectrum, `None` without bound levels."""
    n = 0
    while _admits_level(sp, n):
        n += 1
    return n - 1 if n > 0 else None


def es_level_count(sp: StartingPotential) -> Union[int, float]:
    """The number of bound states.

    Examples:
        >>> es_level_count(StartingPotential.kc(Q=10, alpha=1, L=0))
        3

    Args:
        sp: The starting potential.

    Returns:
        `math.inf` for the oscillators and the undeformed Coulomb potential,
        n_max + 1 otherwise (0 without bound states).

    """
    if sp.family in (FAMILY.HO, FAMILY.RHO) or (sp.family == FAMILY.KC and sp.alpha == 0):
        return math.inf
    n_max = _n_max(sp)
    return 0 if n_max is None else n_max + 1


def es_energy(sp: StartingPotential, n: int) -> Number:
    """The n-th bound state energy of a starting potential.

    Examples:
        >>> es_energy(StartingPotential.ho(omega=2, alpha=0), 3)
        Fraction(7, 1)

    Args:
        sp: The starting potential.
        n: The level index.

    Raises:
        AboveNmax: If the finite spectrum has no level n.

    Returns:
        The energy.

    """
    if n < 0:
        raise ValueError(f"level index must be nonnegative, got {n}")
    if n >= es_level_count(sp):
        raise AboveNmax(f"level {n} lies above the {es_level_count(sp)} bound states of the {sp.family} potential")
    alpha, Delta = sp.alpha, sp.Delta
    if sp.family == FAMILY.HO:
        return (n + Fraction(1, 2)) * Delta + (n**2 + n + Fraction(1, 2)) * alpha
    if sp.family == FAMILY.RHO:
        return Delta * (2 * n + sp.L + Fraction(3, 2)) + alpha * (2 * (n + sp.L + 1) * (2 * n + 1) + Fraction(1, 2))
    if sp.family == FAMILY.KC:
        return -(((sp.Q - alpha * (n**2 + (sp.L + 1) * (2 * n + 1))) / (2 * (n + sp.L + 1))) ** 2)
    numerator = 2 * sp.B * (2 * sp.A + 1) - ((2 * n + 1) * Delta + (2 * n**2 + 2 * n + 1) * alpha)
    return -((numerator / (Delta + (2 * n + 1) * alpha)) ** 2) / 4


# ================================================
# Polynomial Forms
# ================================================


def starting_potential_poly(sp: StartingPotential) -> Tuple[LaurentPoly, DeformingFunction, LaurentPoly]:
    """The potential, deforming function and superpotential of a starting potential.

    The potential satisfies V = W^2 - f dW/dx + E0 with E0 = es_energy(sp, 0).

    Examples:
        >>> V, f, W = starting_potential_poly(StartingPotential.ho(omega=2, alpha=0))
        >>> V, W
        (LaurentPoly(t^2, identity), LaurentPoly(t, identity))

    """
    if sp.family == FAMILY.HO:
        base = BaseCoordinate.real_line()
        f = DeformingFunction.quadratic(sp.alpha, base)
        V = LaurentPoly({2: sp.omega**2 / 4}, base)
        W = LaurentPoly({1: sp.lam}, base)
    elif sp.family == FAMILY.RHO:
        base = BaseCoordinate.half_line()
        f = DeformingFunction.quadratic(sp.alpha, base)
        V = LaurentPoly({-2: sp.L * (sp.L + 1), 2: sp.omega**2 / 4}, base)
        W = LaurentPoly({-1: -(sp.L + 1), 1: sp.mu}, base)
    elif sp.family == FAMILY.KC:
        base = BaseCoordinate.half_line()
        f = DeformingFunction.linear(sp.alpha, base)
        V = LaurentPoly({-2: sp.L * (sp.L + 1), -1: -sp.Q}, base)
        W = LaurentPoly({-1: -(sp.L + 1), 0: sp.mu}, base)
    else:
        base = BaseCoordinate.exp_neg()
        f = DeformingFunction.linear(sp.alpha, base)
        V = LaurentPoly({2: sp.B**2, 1: -sp.B * (2 * sp.A + 1)}, base)
        W = LaurentPoly({1: sp.lam, 0: sp.mu}, base)
    return V, f, W


def _angular_from_coupling(coupling: Number) -> Number:
    """The root L >= -1/2 of L (L + 1) = coupling."""
    if coupling < Fraction(-1, 4):
        raise InvalidParams(f"centrifugal coupling {coupling} is below -1/4")
    return (exact_sqrt(1 + 4 * coupling) - 1) / 2


def reduce_to_start(family: str, V: LaurentPoly, alpha: Number) -> StartingPotential:
    """Identifies the couplings of an m = 0 shaped potential as a starting potential.

    The identifications are B_2 = omega^2/4 (HO, RHO), B_-1 = -Q (KC) and
    B_-2 = B^2, B_-1 = -B (2A + 1) (Morse); the centrifugal coefficient gives L.

    Examples:
        >>> base = BaseCoordinate.real_line()
        >>> reduce_to_start("ho", LaurentPoly({2: 1}, base), 1).omega
        Fraction(2, 1)

    Args:
        family: One of `FAMILY.ALL`.
        V: A potential with only the couplings of the family's starting row.
        alpha: The deformation parameter.

    Raises:
        InvalidParams: If V carries other terms or a coupling leaves its domain.

    Returns:
        The starting potential.

    """
    allowed = {
        FAMILY.HO: {2},
        FAMILY.RHO: {-2, 2},
        FAMILY.KC: {-2, -1},
        FAMILY.MORSE: {1, 2},
    }
    if family not in allowed:
        raise InvalidParams(f"unknown family: {family}")
    extra = set(V.exponents) - allowed[family]
    if extra:
        raise InvalidParams(f"{family} starting potentials have no terms t^{sorted(extra)}")

    if family in (FAMILY.HO, FAMILY.RHO):
        if V.coefficient(2) <= 0:
            raise InvalidParams("B2 = omega^2/4 must be > 0")
        omega = 2 * exact_sqrt(V.coefficient(2))
        if family == FAMILY.HO:
            return StartingPotential.ho(omega, alpha)
        return StartingPotential.rho(omega, alpha, _angular_from_coupling(V.coefficient(-2)))
    if family == FAMILY.KC:
        return StartingPotential.kc(-V.coefficient(-1), alpha, _angular_from_coupling(V.coefficient(-2)))
    if V.coefficient(2) <= 0:
        raise InvalidParams("B_-2 = B^2 must be > 0")
    B = exact_sqrt(V.coefficient(2))
    A = (-V.coefficient(1) / B - 1) / 2
    return StartingPotential.morse(A, B, alpha)
