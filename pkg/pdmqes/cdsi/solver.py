"""The module containing the coefficient-matching solver.

A polynomial superpotential ansatz is fitted to a potential through the Riccati
relation V = W^2 - f dW/dx + E0, equating coefficients from the growth end of
the domain. Equations left over after all ansatz coefficients are fixed become
constraints on the potential. Repeating the fit on the partner potential and
requiring both constraint sets to vanish pins the potential parameters.

Classes:
    Constraint: A leftover coefficient equation.
    AnsatzFit: The fitted superpotential, energy and constraints.
    CompatibilitySolution: The pinned parameters of a two-step fit.
    Mismatch: One differing quantity of a cross-check.
    MismatchReport: The outcome of a cross-check.

Methods:
    ansatz_exponents(family, m):
        The superpotential exponents of a family.
    fit_ansatz(V, f, exponents):
        Fits the ansatz by coefficient matching.
    partner_shift(fit, f):
        Fits the ansatz to the partner potential.
    solve_compatibility(first, second):
        Pins the parameters where both constraint sets vanish.
    hierarchy_gap(first, second):
        The energy difference of the two fitted steps.
    crosscheck_general_m(instance):
        Compares a catalog instance with the fitting pipeline.

"""

import logging
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..config import config
from ..constants import FAMILY
from ..errors import InvalidParams, NegativeLeadingCoefficient, NoRealSolution
from ..susy import partner_v2, riccati_v1
from ..symbolic import BaseCoordinate, DeformingFunction, LaurentPoly
from ..utils.numbers import Number, exact_sqrt, format_number, is_exact, to_number
from ..typings import CrosscheckAttrs

logger = logging.getLogger(__name__)


# ================================================
# Ansatz
# ================================================


def ansatz_exponents(family: str, m: int) -> Tuple[int, ...]:
    """The superpotential exponents of a family in its base coordinate.

    Examples:
        >>> ansatz_exponents("rho", 1)
        (-1, 1, 3)
        >>> ansatz_exponents("morse", 2)
        (-2, -1, 0, 1)

    Args:
        family: One of `FAMILY.ALL`.
        m: The extension index.

    Returns:
        The ascending exponents.

    """
    if m < 1:
        raise InvalidParams("m must be ≥ 1")
    odd = tuple(range(1, 2 * m + 2, 2))
    if family == FAMILY.HO:
        return odd
    if family == FAMILY.RHO:
        return (-1,) + odd
    if family == FAMILY.KC:
        return tuple(range(-1, m + 1))
    if family == FAMILY.MORSE:
        return tuple(range(-m, 2))
    raise InvalidParams(f"unknown family: {family}")


def parameter_label(degree: int, base: BaseCoordinate) -> str:
    """The name of the potential coefficient of t^degree.

    On t = exp(-x) the coefficient of exp(k x) is called B_k, so t^d is labelled B_{-d}.
    """
    return f"B{degree}" if base.is_identity else f"B{-degree}"


@dataclass(frozen=True)
class Constraint:
    """A coefficient equation left over by the fit.

    Attributes:
        degree (int): The exponent of t the equation belongs to.
        label (str): The name of the potential coefficient.
        residual (Number): The value V[degree] - (W^2 - f dW/dx)[degree], zero when satisfied.

    """

    degree: int
    label: str
    residual: Number

    def satisfied(self, tolerance: Optional[float] = None) -> bool:
        if is_exact(self.residual):
            return self.residual == 0
        tolerance = config["float_coefficient_tolerance"] if tolerance is None else tolerance
        return abs(self.residual) <= tolerance


@dataclass(frozen=True)
class AnsatzFit:
    """A superpotential fitted to a potential.

    Attributes:
        W (LaurentPoly): The fitted superpotential.
        exponents (Tuple[int, ...]): The ansatz exponents.
        E0 (Number): The ground state energy.
        constraints (Tuple[Constraint, ...]): The leftover equations.
        V (LaurentPoly): The fitted potential.
        f (DeformingFunction): The deforming function.
        lead_exponent (int): The exponent fixed by the top potential coefficient.
        pole_exponent (Optional[int]): The exponent fixed by a quadratic equation, if any.

    """

    W: LaurentPoly
    exponents: Tuple[int, ...]
    E0: Number
    constraints: Tuple[Constraint, ...]
    V: LaurentPoly
    f: DeformingFunction
    lead_exponent: int
    pole_exponent: Optional[int]

    @property
    def coefficients(self) -> Dict[int, Number]:
        return {k: self.W.coefficient(k) for k in self.exponents}

    @property
    def lam(self) -> Number:
        """The coefficient of the exponent farthest from the growth end."""
        edge = min(self.exponents) if self.W.base.is_identity else max(self.exponents)
        return self.W.coefficient(edge)

    @property
    def satisfied(self) -> bool:
        return all(constraint.satisfied() for constraint in self.constraints)

    def reconstruct(self) -> LaurentPoly:
        return riccati_v1(self.W, self.f) + self.E0


def _growth_order(exponents: Sequence[int], base: BaseCoordinate) -> List[int]:
    """Exponents ordered from the growth end (large x) inward."""
    return sorted(exponents, reverse=base.is_identity)


def _riccati_degrees(exponents: Sequence[int], f: DeformingFunction) -> set:
    """The degrees W^2 - f dW/dx can reach for a generic ansatz."""
    shift = -1 if f.base.is_identity else 0
    degrees = {i + j for i in exponents for j in exponents}
    degrees |= {k + shift + j for k in exponents if k != 0 for j in f.poly.exponents}
    return degrees


def _with(W: LaurentPoly, exponent: int, value: Number) -> LaurentPoly:
    coeffs = W.to_dict()
    coeffs[exponent] = value
    return LaurentPoly(coeffs, W.base)


def _quadratic(residual: Callable[[Number], Number]) -> Tuple[Number, Number, Number]:
    """The coefficients (A, B, C) of a residual known to be at most quadratic."""
    r0, r1, rm = residual(Fraction(0)), residual(Fraction(1)), residual(Fraction(-1))
    return (r1 + rm) / 2 - r0, (r1 - rm) / 2, r0


def _is_negligible(value: Number, scale: Number) -> bool:
    if is_exact(value):
        return value == 0
    return abs(value) <= config["float_coefficient_tolerance"] * max(1.0, abs(float(scale)))


def _quadratic_roots(A: Number, B: Number, C: Number) -> List[Number]:
    if _is_negligible(A, max(abs(B), abs(C))):
        if _is_negligible(B, abs(C)):
            return []
        return [-C / B]
    discriminant = B * B - 4 * A * C
    if discriminant < 0:
        return []
    root = exact_sqrt(discriminant)
    return sorted({(-B - root) / (2 * A), (-B + root) / (2 * A)})


def fit_ansatz(V: LaurentPoly, f: DeformingFunction, exponents: Sequence[int]) -> AnsatzFit:
    """Fits the superpotential ansatz to V by coefficient matching.

    The leading coefficient takes the positive square root of the top potential
    coefficient. A negative-power (Identity) or positive-power (exponential) edge
    coefficient solves a quadratic and takes the smaller root. The remaining
    coefficients follow one affine equation each, the constant term gives E0 and
    every other degree becomes a constraint.

    Examples:
        >>> base = BaseCoordinate.real_line()
        >>> fit = fit_ansatz(LaurentPoly({6: 1}, base), DeformingFunction.quadratic(1, base), (1, 3))
        >>> fit.W, fit.E0, fit.constraints[0].residual
        (LaurentPoly(3/2*t + t^3, identity), Fraction(3, 2), Fraction(9, 4))

    Args:
        V: The potential.
        f: The deforming function.
        exponents: The ansatz exponents.

    Raises:
        NegativeLeadingCoefficient: If the top potential coefficient is not positive.
        NoRealSolution: If the edge coefficient equation has no real root.

    Returns:
        The fit.

    """
    base = V.base
    order = _growth_order(exponents, base)
    lead = order[0]
    edge = order[-1]
    pole = edge if (base.is_identity and edge < 0) or (not base.is_identity and edge > 0) else None

    top = V.coefficient(2 * lead)
    if top <= 0:
        raise NegativeLeadingCoefficient(
            f"the coefficient {parameter_label(2 * lead, base)} = {top} must be positive"
        )
    W = LaurentPoly({lead: exact_sqrt(top)}, base)
    used = {2 * lead, 0}

    def residual_at(degree: int, exponent: int) -> Callable[[Number], Number]:
        return lambda value: V.coefficient(degree) - riccati_v1(_with(W, exponent, value), f).coefficient(degree)

    if pole is not None:
        A, B, C = _quadratic(residual_at(2 * pole, pole))
        roots = _quadratic_roots(A, B, C)
        if not roots:
            raise NoRealSolution(f"no real coefficient of t^{pole}")
        W = _with(W, pole, roots[0])
        used.add(2 * pole)

    for exponent in order[1:]:
        if exponent == pole:
            continue
        degree = exponent + lead
        residual = residual_at(degree, exponent)
        r0, r1 = residual(Fraction(0)), residual(Fraction(1))
        W = _with(W, exponent, -r0 / (r1 - r0))
        used.add(degree)

    R = riccati_v1(W, f)
    E0 = V.constant_term - R.constant_term
    degrees = sorted((_riccati_degrees(exponents, f) | set(V.exponents)) - used, reverse=base.is_identity)
    constraints = tuple(Constraint(d, parameter_label(d, base), V.coefficient(d) - R.coefficient(d)) for d in degrees)
    return AnsatzFit(W, tuple(sorted(exponents)), E0, constraints, V, f, lead, pole)


def partner_shift(fit: AnsatzFit, f: DeformingFunction) -> AnsatzFit:
    """Fits the same ansatz to the partner potential V2 = W^2 + f dW/dx + E0.

    The ground state energy of the returned fit is the first excited energy E1
    of the original potential.

    Examples:
        >>> primed = partner_shift(fit, f)
        >>> primed.lam - fit.lam
        Fraction(3, 1)

    """
    return fit_ansatz(partner_v2(fit.W, f) + fit.E0, f, fit.exponents)


def hierarchy_gap(first: AnsatzFit, second: AnsatzFit) -> Number:
    return second.E0 - first.E0


# ================================================
# Compatibility
# ================================================


@dataclass(frozen=True)
class CompatibilitySolution:
    """The potential pinned by two compatible hierarchy steps.

    Attributes:
        pinned_params (Dict[str, Number]): The potential coefficients by label.
        lambda_pair (Tuple[Number, Number]): The edge coefficients of both steps.
        energies (Tuple[Number, Number]): The energies E0 and E1.
        W (LaurentPoly): The superpotential of the first step.
        branches (Tuple[Dict[str, Number], ...]): Further real solutions, if any.

    """

    pinned_params: Dict[str, Number]
    lambda_pair: Tuple[Number, Number]
    energies: Tuple[Number, Number]
    W: LaurentPoly
    branches: Tuple[Dict[str, Number], ...] = field(default_factory=tuple)

    @property
    def gap(self) -> Number:
        return self.energies[1] - self.energies[0]


def _steps(W: LaurentPoly, f: DeformingFunction, exponents: Sequence[int]) -> Tuple[AnsatzFit, AnsatzFit]:
    R = riccati_v1(W, f)
    first = fit_ansatz(R - R.constant_term, f, exponents)
    return first, partner_shift(first, f)


def solve_compatibility(first: AnsatzFit, second: AnsatzFit) -> CompatibilitySolution:
    """Pins the potential parameters where the constraints of both steps vanish.

    The lead and edge coefficients of `first` (set by the top coefficient and the
    centrifugal or exponential coupling) are kept. The remaining superpotential
    coefficients are the unknowns; the potential is rebuilt from them, so the
    first constraint set vanishes identically. The second constraint set is
    triangular: the unknown closest to the growth end is fixed by the constraint
    closest to it, and so on. Each residual is at most quadratic in its unknown.

    Examples:
        >>> solution = solve_compatibility(fit, partner_shift(fit, f))
        >>> solution.pinned_params["B4"], solution.energies
        (Fraction(-3, 1), (Fraction(0, 1), Fraction(3, 1)))

    Args:
        first: The fit of the potential.
        second: The fit of its partner potential.

    Raises:
        NoRealSolution: If no real parameters make both constraint sets vanish.

    Returns:
        The primary solution, with any further real branches attached.

    """
    if not first.constraints or not second.constraints:
        raise ValueError("both fits must carry constraints")
    f, base, exponents = first.f, first.W.base, first.exponents
    fixed = {first.lead_exponent}
    if first.pole_exponent is not None:
        fixed.add(first.pole_exponent)
    unknowns = [k for k in _growth_order(exponents, base) if k not in fixed]
    degrees = [c.degree for c in second.constraints]
    if len(degrees) != len(unknowns):
        raise NoRealSolution(f"{len(unknowns)} unknowns against {len(degrees)} constraints")

    seed = LaurentPoly({k: first.W.coefficient(k) for k in fixed}, base)

    def residual(W: LaurentPoly, degree: int) -> Number:
        _, partner = _steps(W, f, exponents)
        return next(c.residual for c in partner.constraints if c.degree == degree)

    def branches(W: LaurentPoly, index: int) -> List[LaurentPoly]:
        if index == len(unknowns):
            return [W]
        exponent, degree = unknowns[index], degrees[index]

        def fixed_residual(value):
            return residual(_with(W, exponent, value), degree)

        A, B, C = _quadratic(fixed_residual)
        check = fixed_residual(Fraction(2))
        if not _is_negligible(check - (4 * A + 2 * B + C), max(abs(A), abs(B), abs(C))):
            raise NoRealSolution(f"the {parameter_label(degree, base)} constraint is not quadratic")
        found = []
        for root in _quadratic_roots(A, B, C):
            found.extend(branches(_with(W, exponent, root), index + 1))
        return found

    solutions = []
    for W in branches(seed, 0):
        step1, step2 = _steps(W, f, exponents)
        if step1.satisfied and step2.satisfied and step2.E0 > step1.E0:
            solutions.append((W, step1, step2))
    if not solutions:
        raise NoRealSolution("the constraints of the two steps are incompatible")
    if len(solutions) > 1:
        warnings.warn(f"Warning: {len(solutions)} real compatibility branches found, reporting the first.")

    def pinned(step: AnsatzFit) -> Dict[str, Number]:
        return {parameter_label(k, base): c for k, c in step.V.items() if k != 0}

    W, step1, step2 = solutions[0]
    logger.debug("compatibility solved: W = %s, E0 = %s, E1 = %s", W, step1.E0, step2.E0)
    return CompatibilitySolution(
        pinned_params=pinned(step1),
        lambda_pair=(step1.lam, step2.lam),
        energies=(step1.E0, step2.E0),
        W=W,
        branches=tuple(pinned(extra) for _, extra, _ in solutions[1:]),
    )


# ================================================
# Closed Forms
# ================================================


def ho_m1_closed_form(alpha: Number, B6: Number) -> Dict[str, Number]:
    """The pinned sextic oscillator of one compatible step pair.

    Examples:
        >>> ho_m1_closed_form(1, 1)["B2"]
        Fraction(-3, 1)

    """
    alpha, B6 = to_number(alpha), to_number(B6)
    mu = exact_sqrt(B6)
    lam = 3 * mu / (2 * alpha) - Fraction(3, 2) * alpha
    return {
        "B6": B6,
        "B4": 3 * B6 / alpha - 6 * alpha * mu,
        "B2": 9 * B6 / (4 * alpha**2) - 9 * mu + Fraction(15, 4) * alpha**2,
        "lambda": lam,
        "lambda_prime": lam + 3 * alpha,
        "E0": lam,
        "E1": lam + 3 * mu / alpha,
    }


def ho_m2_closed_form(alpha: Number, B10: Number) -> Dict[str, Number]:
    """The pinned decatic oscillator of one compatible step pair."""
    alpha, B10 = to_number(alpha), to_number(B10)
    nu = exact_sqrt(B10)
    lam = 15 * nu / (8 * alpha**2) - Fraction(5, 2) * alpha
    return {
        "B10": B10,
        "B8": 5 * B10 / alpha,
        "B6": 10 * B10 / alpha**2 - 10 * alpha * nu,
        "B4": 75 * B10 / (8 * alpha**3) - 25 * nu,
        "B2": 225 * B10 / (64 * alpha**4) - 75 * nu / (4 * alpha) + Fraction(35, 4) * alpha**2,
        "lambda": lam,
        "lambda_prime": lam + 5 * alpha,
        "E0": lam,
        "E1": lam + 15 * nu / (4 * alpha**2),
    }


# ================================================
# Cross-check
# ================================================


@dataclass(frozen=True)
class Mismatch:
    quantity: str
    expected: Number
    actual: Number

    def to_json(self, digits: int = 12) -> CrosscheckAttrs:
        return {
            "quantity": self.quantity,
            "expected": format_number(self.expected, digits),
            "actual": format_number(self.actual, digits),
        }


@dataclass(frozen=True)
class MismatchReport:
    """The outcome of a cross-check; consistent when `mismatches` is empty.

    Attributes:
        mismatches (List[Mismatch]): The differing quantities.

    """

    mismatches: List[Mismatch]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def quantities(self) -> List[str]:
        return [mismatch.quantity for mismatch in self.mismatches]


def _differs(expected: Number, actual: Number, tolerance: float) -> bool:
    if is_exact(expected) and is_exact(actual):
        return expected != actual
    return abs(float(expected) - float(actual)) > tolerance * max(1.0, abs(float(expected)))


def crosscheck_general_m(instance, tolerance: Optional[float] = None) -> MismatchReport:
    """Rebuilds a catalog instance with the fitting pipeline and compares.

    The pipeline fits the instance potential, fits its partner and solves the
    compatibility conditions from scratch. Every pinned potential coefficient and
    both energies are compared with the catalog values.

    Examples:
        >>> crosscheck_general_m(build_ho(1, 1, 1)).ok
        True

    Args:
        instance: A `FamilyInstance` with m in {1, 2}.
        tolerance: The relative tolerance of float comparisons.
            Defaults to the `float_coefficient_tolerance` setting.

    Returns:
        The mismatch report.

    """
    if instance.m not in (1, 2):
        raise InvalidParams("the fitting pipeline covers m = 1 and m = 2")
    tolerance = config["float_coefficient_tolerance"] if tolerance is None else tolerance
    exponents = ansatz_exponents(instance.family, instance.m)
    first = fit_ansatz(instance.V, instance.f, exponents)
    second = partner_shift(first, instance.f)
    mismatches = [
        Mismatch(f"constraint {c.label}", Fraction(0), c.residual)
        for c in first.constraints + second.constraints
        if not c.satisfied(tolerance)
    ]
    try:
        solution = solve_compatibility(first, second)
    except NoRealSolution:
        mismatches.append(Mismatch("compatibility", Fraction(1), Fraction(0)))
        return MismatchReport(mismatches)

    base = instance.V.base
    labels = {parameter_label(k, base) for k in instance.V.exponents if k != 0} | set(solution.pinned_params)
    for label in sorted(labels):
        degree = int(label[1:]) if base.is_identity else -int(label[1:])
        expected = instance.V.coefficient(degree)
        actual = solution.pinned_params.get(label, Fraction(0))
        if _differs(expected, actual, tolerance):
            mismatches.append(Mismatch(label, expected, actual))
    for name, expected, actual in (
        ("E0", instance.E0, solution.energies[0]),
        ("E1", instance.E1, solution.energies[1]),
    ):
        if _differs(expected, actual, tolerance):
            mismatches.append(Mismatch(name, expected, actual))
    return MismatchReport(mismatches)
