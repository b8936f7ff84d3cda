"""The module containing the four extended families and their reference instances.

Classes:
    FamilyInstance: A built extension with its two known eigenstates.
    FigureInstance: A reference instance with its caption energies.

Methods:
    angular_L(l, d):
        The angular parameter of a radial problem in d dimensions.
    build_ho(m, alpha, B_top), build_rho(m, alpha, L, B_top),
    build_kc(m, alpha, L, B_top), build_morse(m, alpha, B2minus, B_top):
        Build the extension of index m of a family.
    build_instance(spec):
        Builds an instance from a specification dictionary.
    figure_instances():
        The four reference instances.

"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from ..config import config
from ..constants import FAMILY, FIGURE
from ..errors import IncompatibleGenerator, InvalidParams
from ..susy import (
    GeneratingPair,
    WavefunctionForm,
    first_excited,
    generating_pair_from_wplus,
    ground_state,
    partner_v2,
    riccati_v1,
    superpotentials_from_generating,
)
from ..symbolic import BaseCoordinate, DeformingFunction, LaurentPoly
from ..utils.numbers import Number, binomial, double_factorial, exact_sqrt, to_number
from .serialize import parse_instance_spec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyInstance:
    """A fully parameterized extension V^(m) with its two known eigenstates.

    Attributes:
        family (str): One of `FAMILY.ALL`.
        m (int): The extension index.
        alpha (Number): The deformation parameter.
        B_top (Number): The top potential coefficient.
        L (Optional[Number]): The angular parameter (RHO and KC).
        B2minus (Optional[Number]): The coefficient B^2 of exp(-2x) (Morse).
        Delta (Optional[Number]): The Morse parameter sqrt(4 B^2 + alpha^2).
        f (DeformingFunction): The deforming function.
        V (LaurentPoly): The potential, without constant term.
        W (LaurentPoly): The superpotential of V.
        Wprime (LaurentPoly): The superpotential of the partner step.
        Wplus (LaurentPoly): The generating function W' + W.
        Wminus (LaurentPoly): The generating function W' - W.
        E0 (Number): The ground state energy.
        E1 (Number): The first excited state energy.
        psi0 (WavefunctionForm): The ground state.
        psi1 (WavefunctionForm): The first excited state.
        partner_coeffs (LaurentPoly): The partner V2 = V1 + 2 f dW/dx without its constant.
        R (Number): The constant of the partner V2.

    """

    family: str
    m: int
    alpha: Number
    B_top: Number
    L: Optional[Number]
    B2minus: Optional[Number]
    Delta: Optional[Number]
    f: DeformingFunction
    V: LaurentPoly
    W: LaurentPoly
    Wprime: LaurentPoly
    Wplus: LaurentPoly
    Wminus: LaurentPoly
    E0: Number
    E1: Number
    psi0: WavefunctionForm
    psi1: WavefunctionForm
    partner_coeffs: LaurentPoly
    R: Number

    @property
    def base(self) -> BaseCoordinate:
        return self.f.base

    @property
    def gap(self) -> Number:
        return self.E1 - self.E0

    @property
    def generating_pair(self) -> GeneratingPair:
        return GeneratingPair(self.Wplus, self.Wminus, self.gap)

    @property
    def spec(self) -> Dict[str, object]:
        """The instance specification with typed values."""
        spec = {"family": self.family, "m": self.m, "alpha": self.alpha, "B_top": self.B_top}
        if self.L is not None:
            spec["L"] = self.L
        if self.B2minus is not None:
            spec["B2minus"] = self.B2minus
        return spec


# ================================================
# Validation
# ================================================


def _check_common(m: int, alpha: Number, B_top: Number):
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidParams("m must be ≥ 1")
    if alpha <= 0:
        raise InvalidParams("alpha must be > 0")
    if B_top <= 0:
        raise InvalidParams("B_top must be > 0")


def _check_L(L: Optional[Number]):
    if L is None:
        raise InvalidParams("L is required")
    if L < Fraction(-1, 2):
        raise InvalidParams("L must be ≥ -1/2")


def angular_L(l: int, d: int) -> Fraction:
    """The angular parameter L = l + (d - 3)/2 of a d-dimensional radial problem.

    Examples:
        >>> angular_L(1, 3)
        Fraction(1, 1)

    """
    return Fraction(l) + Fraction(d - 3, 2)


# ================================================
# Assembly
# ================================================


def _assemble(
    family: str,
    m: int,
    f: DeformingFunction,
    Wplus: LaurentPoly,
    Wminus: LaurentPoly,
    alpha: Number,
    B_top: Number,
    L: Optional[Number] = None,
    B2minus: Optional[Number] = None,
    Delta: Optional[Number] = None,
) -> FamilyInstance:
    """Derives every field of an instance from its tabulated generating functions."""
    pair = generating_pair_from_wplus(Wplus, f)
    exact = Wplus.is_exact and Wminus.is_exact
    scale = max((abs(float(c)) for _, c in Wminus.items()), default=0.0)
    tolerance = config["float_coefficient_tolerance"] * max(1.0, scale)
    if (pair.Wminus != Wminus) if exact else not pair.Wminus.almost_equal(Wminus, tolerance):
        raise IncompatibleGenerator(f"W- = {pair.Wminus} differs from the tabulated {Wminus}")

    W, Wprime = superpotentials_from_generating(pair)
    V1 = riccati_v1(W, f)
    E0 = -V1.constant_term
    V = V1.without_constant()
    partner = partner_v2(W, f)
    instance = FamilyInstance(
        family=family,
        m=m,
        alpha=alpha,
        B_top=B_top,
        L=L,
        B2minus=B2minus,
        Delta=Delta,
        f=f,
        V=V,
        W=W,
        Wprime=Wprime,
        Wplus=Wplus,
        Wminus=pair.Wminus,
        E0=E0,
        E1=E0 + pair.gap,
        psi0=ground_state(W, f),
        psi1=first_excited(pair, Wprime, f),
        partner_coeffs=partner.without_constant(),
        R=partner.constant_term,
    )
    logger.debug("built %s m=%d: E0 = %s, E1 = %s", family, m, instance.E0, instance.E1)
    return instance


# ================================================
# Builders
# ================================================


def build_ho(m: int, alpha: Number, B_top: Number) -> FamilyInstance:
    """Builds the deformed harmonic oscillator extension of index m.

    The potential sum_{k=1}^{2m+1} B_2k x^(2k) lives on the real line with
    f = 1 + alpha x^2 and B_top = B_{4m+2}.

    Examples:
        >>> instance = build_ho(1, 1, 1)
        >>> instance.E0, instance.E1
        (Fraction(0, 1), Fraction(3, 1))

    Args:
        m: The extension index, at least 1.
        alpha: The deformation parameter.
        B_top: The top coefficient B_{4m+2}.

    Raises:
        InvalidParams: If a parameter is out of range.

    Returns:
        The instance.

    """
    alpha, B_top = to_number(alpha), to_number(B_top)
    _check_common(m, alpha, B_top)
    base = BaseCoordinate.real_line()
    root = exact_sqrt(B_top)
    scale = Fraction(double_factorial(2 * m + 1))
    Wplus = LaurentPoly(
        {
            2 * k + 1: 2 * root * scale * alpha ** (k - m)
            / (double_factorial(2 * k + 1) * double_factorial(2 * m - 2 * k))
            for k in range(m + 1)
        },
        base,
    )
    Wminus = LaurentPoly({1: (2 * m + 1) * alpha}, base)
    return _assemble(FAMILY.HO, m, DeformingFunction.quadratic(alpha, base), Wplus, Wminus, alpha, B_top)


def build_rho(m: int, alpha: Number, L: Number, B_top: Number) -> FamilyInstance:
    """Builds the deformed radial oscillator extension of index m.

    Examples:
        >>> instance = build_rho(1, 1, 1, 1)
        >>> instance.E0, instance.E1
        (Fraction(9, 2), Fraction(65, 2))

    """
    alpha, B_top, L = to_number(alpha), to_number(B_top), None if L is None else to_number(L)
    _check_common(m, alpha, B_top)
    _check_L(L)
    base = BaseCoordinate.half_line()
    root = exact_sqrt(B_top)
    coeffs = {-1: -(2 * L + 3)}
    for k in range(1, m + 2):
        coeffs[2 * k - 1] = 2 * root * binomial(m + 1, k) * alpha ** (k - m - 1)
    Wplus = LaurentPoly(coeffs, base)
    Wminus = LaurentPoly({-1: -1, 1: (2 * m + 1) * alpha}, base)
    return _assemble(FAMILY.RHO, m, DeformingFunction.quadratic(alpha, base), Wplus, Wminus, alpha, B_top, L=L)


def build_kc(m: int, alpha: Number, L: Number, B_top: Number) -> FamilyInstance:
    """Builds the deformed Kepler-Coulomb extension of index m.

    The potential L(L+1)/x^2 + B_{-1}/x + sum_{k=1}^{2m} B_k x^k lives on the half
    line with f = 1 + alpha x and B_top = B_{2m}.

    Examples:
        >>> instance = build_kc(1, 1, 1, 1)
        >>> instance.E0, instance.gap
        (Fraction(-101, 4), Fraction(14, 1))

    """
    alpha, B_top, L = to_number(alpha), to_number(B_top), None if L is None else to_number(L)
    _check_common(m, alpha, B_top)
    _check_L(L)
    base = BaseCoordinate.half_line()
    root = exact_sqrt(B_top)
    coeffs = {-1: -(2 * L + 3), 0: -(m + 1) * alpha * (2 * L + 3)}
    for k in range(1, m + 1):
        coeffs[k] = 2 * root * binomial(m + 1, k + 1) * alpha ** (k - m)
    Wplus = LaurentPoly(coeffs, base)
    Wminus = LaurentPoly({-1: -1, 0: m * alpha}, base)
    return _assemble(FAMILY.KC, m, DeformingFunction.linear(alpha, base), Wplus, Wminus, alpha, B_top, L=L)


def build_morse(m: int, alpha: Number, B2minus: Number, B_top: Number) -> FamilyInstance:
    """Builds the deformed Morse extension of index m.

    The potential B^2 exp(-2x) + B_{-1} exp(-x) + sum_{k=1}^{2m} B_k exp(kx) is written
    in t = exp(-x) with f = 1 + alpha t and B_top = B_{2m}.

    Examples:
        >>> instance = build_morse(1, 1, Fraction(3, 4), 1)
        >>> instance.Delta, instance.E0, instance.E1
        (Fraction(2, 1), Fraction(-65, 4), Fraction(-17, 4))

    Args:
        m: The extension index, at least 1.
        alpha: The deformation parameter.
        B2minus: The coefficient B^2 of exp(-2x).
        B_top: The top coefficient B_{2m}.

    Raises:
        InvalidParams: If a parameter is out of range.

    Returns:
        The instance. Its coefficients are floats when Delta is irrational.

    """
    alpha, B_top = to_number(alpha), to_number(B_top)
    _check_common(m, alpha, B_top)
    if B2minus is None or to_number(B2minus) <= 0:
        raise InvalidParams("B2minus must be > 0")
    B2minus = to_number(B2minus)
    base = BaseCoordinate.exp_neg()
    root = exact_sqrt(B_top)
    Delta = exact_sqrt(4 * B2minus + alpha**2)
    coeffs = {1: -(2 * alpha + Delta), 0: -(m + 1) * (Delta / alpha + 2)}
    for k in range(1, m + 1):
        coeffs[-k] = 2 * root * binomial(m + 1, k + 1) * alpha ** (m - k)
    Wplus = LaurentPoly(coeffs, base)
    Wminus = LaurentPoly({1: -alpha, 0: m}, base)
    return _assemble(
        FAMILY.MORSE,
        m,
        DeformingFunction.linear(alpha, base),
        Wplus,
        Wminus,
        alpha,
        B_top,
        B2minus=B2minus,
        Delta=Delta,
    )


def build_instance(spec) -> FamilyInstance:
    """Builds an instance from a specification dictionary.

    Examples:
        >>> build_instance({"family": "rho", "m": 1, "alpha": "1", "L": "1", "B_top": "1"}).E0
        Fraction(9, 2)

    Args:
        spec: An `InstanceSpecAttrs` dictionary.

    Raises:
        InstanceSpecError: If the specification is malformed.
        InvalidParams: If a parameter is out of range.

    Returns:
        The instance.

    """
    spec = parse_instance_spec(spec)
    family = spec["family"]
    if family == FAMILY.HO:
        return build_ho(spec["m"], spec["alpha"], spec["B_top"])
    if family == FAMILY.RHO:
        return build_rho(spec["m"], spec["alpha"], spec["L"], spec["B_top"])
    if family == FAMILY.KC:
        return build_kc(spec["m"], spec["alpha"], spec["L"], spec["B_top"])
    return build_morse(spec["m"], spec["alpha"], spec["B2minus"], spec["B_top"])


@dataclass(frozen=True)
class FigureInstance:
    """A reference instance with the energies quoted in its caption.

    Attributes:
        name (str): The family name.
        instance (FamilyInstance): The built instance.
        caption_E0 (Fraction): The quoted ground state energy.
        caption_E1 (Fraction): The quoted first excited state energy.

    """

    name: str
    instance: FamilyInstance
    caption_E0: Fraction
    caption_E1: Fraction

    @property
    def agrees(self) -> bool:
        return self.instance.E0 == self.caption_E0 and self.instance.E1 == self.caption_E1


def figure_instances() -> List[FigureInstance]:
    """The four reference instances in the order HO, RHO, KC, Morse."""
    return [
        FigureInstance(
            entry["spec"]["family"], build_instance(entry["spec"]), Fraction(entry["E0"]), Fraction(entry["E1"])
        )
        for entry in FIGURE.ALL
    ]
