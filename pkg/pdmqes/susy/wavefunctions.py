"""The module containing the closed-form eigenstates and their diagnostics.

Classes:
    WavefunctionForm: An unnormalized eigenfunction t^a f^p P(t) exp(Q(t)).
    BoundaryProbe: The boundary ladder of one domain end.

Methods:
    ground_state(W, f):
        The ground state of a superpotential.
    first_excited(gp, Wprime, f):
        The first excited state of a generating pair.
    hamiltonian_residual(psi, V, f, E, probe_points, step):
        The relative residual of H psi = E psi.
    count_sign_changes(values):
        Sign changes of a sampled function, zeros skipped.
    node_grid(psi, points):
        The default grid used to count the nodes of psi.
    node_count(psi, grid):
        The number of nodes of psi.
    boundary_decay(psi, rungs, tail):
        Samples |psi|^2 f on a geometric ladder toward each domain end.

"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import config
from ..errors import ProbeOutOfDomain
from ..symbolic import DeformingFunction, LaurentPoly, integrate_over_f
from ..symbolic.coordinates import ArrayLike
from ..utils.numbers import Number, format_number
from .engine import GeneratingPair


# ================================================
# Closed Forms
# ================================================


@dataclass(frozen=True)
class WavefunctionForm:
    """A closed-form unnormalized eigenfunction psi = t^a f^p P(t) exp(Q(t)).

    Attributes:
        a (Number): The power of the base coordinate.
        p (Number): The power of the deforming function.
        P (LaurentPoly): The polynomial factor (1 for ground states).
        Q (LaurentPoly): The exponent.
        f (DeformingFunction): The deforming function.

    """

    a: Number
    p: Number
    P: LaurentPoly
    Q: LaurentPoly
    f: DeformingFunction

    @property
    def base(self):
        return self.f.base

    def log_abs(self, x: ArrayLike) -> np.ndarray:
        """The logarithm ln|psi(x)|, free of overflow far out in the domain."""
        x = np.asarray(x, dtype=float)
        value = self.Q.evaluate(x)
        if self.a != 0:
            value = value + float(self.a) * self.base.log_abs_t(x)
        if self.p != 0:
            value = value + float(self.p) * self.f.log_value(x)
        if not (self.P.is_constant and self.P.constant_term == 1):
            with np.errstate(divide="ignore"):
                value = value + np.log(np.abs(self.P.evaluate(x)))
        return value

    def sign(self, x: ArrayLike) -> np.ndarray:
        """The sign of psi(x); only P and an integer power of a negative t can flip it."""
        x = np.asarray(x, dtype=float)
        t = self.base.t_of_x(x)
        with np.errstate(divide="ignore", invalid="ignore"):
            signs = np.sign(self.P.evaluate_t(t))
        signs = np.where(np.isfinite(signs), signs, 0.0)
        if self.a != 0 and Fraction(self.a).denominator == 1 and int(self.a) % 2 == 1:
            signs = signs * np.sign(t)
        return signs

    def evaluate(self, x: ArrayLike) -> np.ndarray:
        with np.errstate(over="ignore"):
            return self.sign(x) * np.exp(self.log_abs(x))

    def to_json(self, digits: int = 12) -> Dict[str, object]:
        return {
            "a": format_number(self.a, digits),
            "p": format_number(self.p, digits),
            "P": self.P.to_json(digits),
            "Q": self.Q.to_json(digits),
        }


def ground_state(W: LaurentPoly, f: DeformingFunction) -> WavefunctionForm:
    """The ground state psi0 = f^(-1/2) exp(-integral of W/f).

    Examples:
        >>> base = BaseCoordinate.real_line()
        >>> psi = ground_state(LaurentPoly({3: 1}, base), DeformingFunction.quadratic(1, base))
        >>> psi.p, psi.Q
        (Fraction(0, 1), LaurentPoly(-1/2*t^2, identity))

    Args:
        W: The superpotential.
        f: The deforming function.

    Raises:
        NonElementary: If the integral has no logarithmic closed form.

    Returns:
        The wavefunction form with P = 1.

    """
    form = integrate_over_f(W, f)
    return WavefunctionForm(
        a=-form.c_log_t,
        p=Fraction(-1, 2) - form.c_log_f,
        P=LaurentPoly.constant(1, W.base),
        Q=-form.poly_part,
        f=f,
    )


def first_excited(gp: GeneratingPair, Wprime: LaurentPoly, f: DeformingFunction) -> WavefunctionForm:
    """The first excited state psi1 = W+ f^(-1/2) exp(-integral of W'/f)."""
    ground = ground_state(Wprime, f)
    return WavefunctionForm(a=ground.a, p=ground.p, P=gp.Wplus, Q=ground.Q, f=f)


# ================================================
# Residuals
# ================================================


def hamiltonian_residual(
    psi: WavefunctionForm,
    V: LaurentPoly,
    f: DeformingFunction,
    E: Number,
    probe_points: Sequence[float],
    step: Optional[float] = None,
    epsilon: Optional[float] = None,
) -> np.ndarray:
    """The relative residuals |(H - E) psi| / max(|psi|, eps) at the probes.

    The kinetic term -sqrt(f) d/dx f d/dx sqrt(f) acts on phi = sqrt(f) psi, whose
    first and second derivatives are taken with five-point central differences of
    step h = step (1 + |x|).

    Args:
        psi: The wavefunction.
        V: The potential.
        f: The deforming function.
        E: The energy.
        probe_points: The interior points.
        step: The base step. Defaults to the `residual_step` setting.
        epsilon: The denominator floor. Defaults to the `residual_epsilon` setting.

    Raises:
        ProbeOutOfDomain: If a stencil point leaves the open domain.

    Returns:
        The residual of every probe.

    """
    step = config["residual_step"] if step is None else step
    epsilon = config["residual_epsilon"] if epsilon is None else epsilon
    x = np.asarray(probe_points, dtype=float)
    h = step * (1.0 + np.abs(x))
    if not (np.all(psi.base.contains(x - 2 * h)) and np.all(psi.base.contains(x + 2 * h))):
        raise ProbeOutOfDomain(f"probes {list(x)} are not interior to {psi.base.x_domain}")

    def phi(points):
        return np.sqrt(f.evaluate(points)) * psi.evaluate(points)

    p2, p1, p0, m1, m2 = phi(x + 2 * h), phi(x + h), phi(x), phi(x - h), phi(x - 2 * h)
    first = (-p2 + 8 * p1 - 8 * m1 + m2) / (12 * h)
    second = (-p2 + 16 * p1 - 30 * p0 + 16 * m1 - m2) / (12 * h**2)

    f_value = f.evaluate(x)
    f_prime = f.derivative().evaluate(x)
    psi_value = psi.evaluate(x)
    kinetic = -np.sqrt(f_value) * (f_prime * first + f_value * second)
    residual = kinetic + (V.evaluate(x) - float(E)) * psi_value
    return np.abs(residual) / np.maximum(np.abs(psi_value), epsilon)


# ================================================
# Structure Probes
# ================================================


def count_sign_changes(values: ArrayLike) -> int:
    """The number of sign changes in a sequence, exact zeros skipped."""
    signs = np.sign(np.asarray(values, dtype=float))
    signs = signs[np.isfinite(signs) & (signs != 0)]
    return int(np.count_nonzero(np.diff(signs)))


def _root_bounds(P: LaurentPoly) -> Optional[Tuple[float, float]]:
    """Cauchy bounds on |t| of the nonzero roots of P, `None` without such roots."""
    if P.is_monomial or P.is_zero:
        return None
    coeffs = [abs(float(P.coefficient(k))) for k in range(P.low_degree, P.degree + 1)]
    lead, trail = coeffs[-1], coeffs[0]
    upper = 1.0 + max(c / lead for c in coeffs[:-1])
    lower = 1.0 / (1.0 + max(c / trail for c in coeffs[1:]))
    return lower, upper


def node_grid(psi: WavefunctionForm, points: Optional[int] = None) -> np.ndarray:
    """A uniform x grid enclosing every sign change of psi."""
    points = config["node_grid_points"] if points is None else points
    bounds = _root_bounds(psi.P) or (0.5, 2.0)
    lower, upper = bounds
    if psi.base.is_symmetric:
        return np.linspace(-2.0 * upper, 2.0 * upper, points)
    if psi.base.is_identity:
        return np.linspace(0.5 * lower, 2.0 * upper, points)
    return np.linspace(-math.log(2.0 * upper), -math.log(0.5 * lower), points)


def node_count(psi: WavefunctionForm, grid: Optional[ArrayLike] = None) -> int:
    """The number of sign changes of psi on the grid (default `node_grid(psi)`).

    Examples:
        >>> node_count(instance.psi1)
        1

    """
    grid = node_grid(psi) if grid is None else np.asarray(grid, dtype=float)
    return count_sign_changes(psi.sign(grid))


@dataclass(frozen=True)
class BoundaryProbe:
    """The boundary ladder of one domain end.

    Attributes:
        endpoint (float): The approached end of the domain.
        points (np.ndarray): The ladder points, ordered toward the end.
        log_density (np.ndarray): The values ln(|psi|^2 f) at the points.
        decays (bool): Whether the tail decreases strictly toward zero.

    """

    endpoint: float
    points: np.ndarray
    log_density: np.ndarray
    decays: bool


def _ladder(endpoint: float, rungs: int) -> np.ndarray:
    exponents = np.arange(rungs, dtype=float)
    if endpoint == math.inf:
        return np.sqrt(2.0) ** exponents
    if endpoint == -math.inf:
        return -np.sqrt(2.0) ** exponents
    return endpoint + 0.5**exponents


def _tail_decays(log_density: np.ndarray, tail: int) -> bool:
    finite = log_density[np.isfinite(log_density)]
    if finite.size == 0:
        return False
    tail_values = log_density[-tail:]
    for previous, current in zip(tail_values[:-1], tail_values[1:]):
        if current == -math.inf:
            continue
        if not current < previous:
            return False
    return bool(tail_values[-1] < np.max(finite) + math.log(1e-2))


def boundary_decay(
    psi: WavefunctionForm, rungs: Optional[int] = None, tail: Optional[int] = None
) -> List[BoundaryProbe]:
    """Probes |psi|^2 f on a geometric ladder toward each domain end.

    Infinite ends are approached with ratio sqrt(2) starting at distance 1, the
    finite end 0 of the half line with ratio 1/2. A ladder decays when its last
    `tail` values decrease strictly (minus infinity allowed) and the final value
    lies two decades below the ladder maximum.

    Args:
        psi: The wavefunction.
        rungs: The ladder length. Defaults to the `boundary_ladder_rungs` setting.
        tail: The checked tail. Defaults to the `boundary_tail_rungs` setting.

    Returns:
        One probe per domain end.

    """
    rungs = config["boundary_ladder_rungs"] if rungs is None else rungs
    tail = config["boundary_tail_rungs"] if tail is None else tail
    probes = []
    for endpoint in psi.base.x_domain:
        points = _ladder(endpoint, rungs)
        log_density = 2.0 * psi.log_abs(points) + psi.f.log_value(points)
        log_density = np.where(np.isnan(log_density), -math.inf, log_density)
        probes.append(BoundaryProbe(endpoint, points, log_density, _tail_decays(log_density, tail)))
    return probes
