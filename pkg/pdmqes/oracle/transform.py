"""The module containing the constant-mass transform of a deformed problem.

With chi = sqrt(f) psi and du = dx/f the deformed operator becomes
-d^2/du^2 + V(x(u)), so the deformed spectrum is the spectrum of an ordinary
Schrödinger operator on the u interval.

Classes:
    CoordinateMap: The closed-form maps u(x) and x(u) of a deforming function.
    TransformedProblem: The truncated constant-mass problem.

Methods:
    transform(V, f, energy):
        Builds the truncated problem.
    truncation(tp, energy):
        Recomputes the truncation ends for an energy estimate.

"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from ..config import config
from ..errors import TruncationInsufficient, UnsupportedDeformation
from ..symbolic import DeformingFunction, LaurentPoly
from ..symbolic.coordinates import ArrayLike

logger = logging.getLogger(__name__)

_MARCH_OFFSETS = np.concatenate(([0.0], np.geomspace(1e-3, 1e12, 6000)))
_FLAT_TOLERANCE = 1e-8
# share of the gap to a finite natural end an enlarged cut may cover
_END_REACH = 0.5

# end behaviours
_REGULAR = "regular"
_WALL = "wall"
_FLAT = "flat"


# ================================================
# Coordinate Maps
# ================================================


@dataclass(frozen=True)
class CoordinateMap:
    """The map u(x) with du/dx = 1/f and its closed-form inverse.

    Examples:
        >>> from pdmqes.symbolic import BaseCoordinate, DeformingFunction
        >>> cmap = CoordinateMap(DeformingFunction.quadratic(1, BaseCoordinate.real_line()))
        >>> cmap.natural_domain
        (-1.5707963267948966, 1.5707963267948966)

    Attributes:
        f (DeformingFunction): The deforming function.

    """

    f: DeformingFunction

    @property
    def _alpha(self) -> float:
        return float(self.f.alpha)

    @property
    def natural_domain(self) -> Tuple[float, float]:
        """The image of the x domain."""
        x1, x2 = self.f.base.x_domain
        if self.f.is_undeformed:
            return x1, x2
        if self.f.base.is_identity and self.f.power == 2:
            end = math.pi / (2.0 * math.sqrt(self._alpha))
            return (-end if x1 == -math.inf else 0.0), end
        if self.f.base.is_identity:
            return 0.0, math.inf
        return math.log(self._alpha), math.inf

    def u_of_x(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.f.is_undeformed:
            return x
        alpha = self._alpha
        if self.f.base.is_identity and self.f.power == 2:
            return np.arctan(math.sqrt(alpha) * x) / math.sqrt(alpha)
        if self.f.base.is_identity:
            return np.log1p(alpha * x) / alpha
        return np.logaddexp(x, math.log(alpha))

    def x_of_u(self, u: ArrayLike) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        if self.f.is_undeformed:
            return u
        alpha = self._alpha
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            if self.f.base.is_identity and self.f.power == 2:
                return np.tan(math.sqrt(alpha) * u) / math.sqrt(alpha)
            if self.f.base.is_identity:
                return np.expm1(alpha * u) / alpha
            return u + np.log1p(-alpha * np.exp(-u))


# ================================================
# End Behaviour
# ================================================


def _end_behaviour(V: LaurentPoly, f: DeformingFunction, x_end: float) -> Tuple[str, float]:
    """Classifies the potential at one x end as regular, wall or flat (with its limit)."""
    if math.isfinite(x_end):
        return _REGULAR, math.nan
    base = f.base
    toward_small_t = not base.is_identity and x_end == math.inf
    if toward_small_t:
        exponent = V.low_degree
        growing = exponent is not None and exponent < 0
    else:
        exponent = V.degree
        growing = exponent is not None and exponent > 0
    if not growing:
        return _FLAT, float(V.constant_term)
    sign = math.copysign(1.0, float(V.coefficient(exponent)))
    if base.is_identity and x_end == -math.inf and exponent % 2 == 1:
        sign = -sign
    if sign < 0:
        raise TruncationInsufficient(f"the potential is unbounded below toward x = {x_end}")
    return _WALL, math.inf


# ================================================
# Transformed Problem
# ================================================


@dataclass(frozen=True)
class TransformedProblem:
    """A constant-mass problem -chi'' + V(x(u)) chi = E chi on a truncated u interval.

    Dirichlet conditions hold at both ends of `u_domain`.

    Attributes:
        V (LaurentPoly): The potential.
        f (DeformingFunction): The deforming function.
        natural_domain (Tuple[float, float]): The untruncated u interval.
        u_domain (Tuple[float, float]): The truncated u interval.
        truncated (Tuple[bool, bool]): Whether each end was cut.
        energy (float): The energy estimate the cuts were placed for.

    """

    V: LaurentPoly
    f: DeformingFunction
    natural_domain: Tuple[float, float]
    u_domain: Tuple[float, float]
    truncated: Tuple[bool, bool]
    energy: float

    @property
    def coordinates(self) -> CoordinateMap:
        return CoordinateMap(self.f)

    @property
    def width(self) -> float:
        return self.u_domain[1] - self.u_domain[0]

    def x_of_u(self, u: ArrayLike) -> np.ndarray:
        return self.coordinates.x_of_u(u)

    def u_of_x(self, x: ArrayLike) -> np.ndarray:
        return self.coordinates.u_of_x(x)

    def potential(self, u: ArrayLike) -> np.ndarray:
        """The sampled V(x(u)), clipped to the `oracle_potential_ceiling` setting."""
        ceiling = config["oracle_potential_ceiling"]
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            values = self.V.evaluate(self.x_of_u(u))
        values = np.where(np.isnan(values), ceiling, values)
        return np.clip(values, -ceiling, ceiling)

    def grid(self, points: int) -> np.ndarray:
        """The `points` interior points of the uniform mesh with step width/(points+1)."""
        lo, hi = self.u_domain
        step = (hi - lo) / (points + 1)
        return lo + step * np.arange(1, points + 1)

    def step(self, points: int) -> float:
        return self.width / (points + 1)

    def enlarged(self, factor: float) -> "TransformedProblem":
        """The problem with its cut ends moved out until the box is `factor` times wider.

        A cut end never moves more than half way to a finite natural end, where
        the potential is singular and only its clipped value would be sampled.

        """
        cut_ends = sum(self.truncated)
        if cut_ends == 0:
            return self
        shift = (factor - 1.0) * self.width / cut_ends
        lo, hi = self.u_domain
        natural_lo, natural_hi = self.natural_domain
        if self.truncated[0]:
            lo = max(lo - shift, lo - _END_REACH * (lo - natural_lo))
        if self.truncated[1]:
            hi = min(hi + shift, hi + _END_REACH * (natural_hi - hi))
        return replace(self, u_domain=(lo, hi))


# ================================================
# Truncation
# ================================================


def _march(tp: TransformedProblem, x_start: float, direction: float) -> Tuple[np.ndarray, np.ndarray]:
    """Samples u and V along x from the start point toward one domain end."""
    x = x_start + direction * _MARCH_OFFSETS
    u = tp.u_of_x(x)
    inside = (u > tp.natural_domain[0]) & (u < tp.natural_domain[1])
    u = u[inside]
    return u, tp.potential(u)


def _wall_cut(u: np.ndarray, values: np.ndarray, energy: float) -> Optional[float]:
    """The first march point above the wall with enough tunneling action behind it."""
    wall = max(config["oracle_wall_floor"], config["oracle_wall_factor"] * abs(energy))
    barrier = config["oracle_barrier_action"]
    momentum = np.sqrt(np.maximum(values - energy, 0.0))
    action = 0.0
    for j in range(1, len(u)):
        if values[j] <= energy:
            action = 0.0
            continue
        action += abs(u[j] - u[j - 1]) * 0.5 * (momentum[j] + momentum[j - 1])
        if values[j] >= wall and action >= barrier:
            return float(u[j])
    return None


def _flat_cut(u: np.ndarray, values: np.ndarray, limit: float, direction: float) -> float:
    """The point where the potential settles to its limit, extended by the tail length."""
    unsettled = np.nonzero(np.abs(values - limit) > _FLAT_TOLERANCE * max(1.0, abs(limit)))[0]
    index = min(unsettled[-1] + 1, len(u) - 1) if unsettled.size else 0
    return float(u[index]) + direction * config["oracle_flat_tail_length"]


def _start_point(f: DeformingFunction) -> float:
    return f.base.reference_point


def truncation(tp: TransformedProblem, energy: float) -> TransformedProblem:
    """Places the cut ends of a problem for the energy estimate of its highest level.

    A wall end is cut where the potential exceeds max(floor, factor |E|) and the
    tunneling action from the turning point reaches the barrier setting. A flat
    end is cut a tail length past the point where the potential settles. Cuts
    within the snap distance of a finite natural end move onto it.

    Args:
        tp: The problem.
        energy: The energy estimate.

    Raises:
        TruncationInsufficient: If the potential is unbounded below at an end.

    Returns:
        The problem with the new cut ends.

    """
    x_start = _start_point(tp.f)
    ends = []
    for index, direction in enumerate((-1.0, 1.0)):
        natural = tp.natural_domain[index]
        behaviour, limit = _end_behaviour(tp.V, tp.f, tp.f.base.x_domain[index])
        if behaviour == _REGULAR:
            ends.append((natural, False))
            continue
        u, values = _march(tp, x_start, direction)
        if behaviour == _WALL:
            cut = _wall_cut(u, values, energy)
        else:
            cut = _flat_cut(u, values, limit, direction)
        if cut is None:
            cut = natural if math.isfinite(natural) else float(u[-1])
        ends.append((cut, cut != natural))

    (lo, cut_lo), (hi, cut_hi) = ends
    snap = config["oracle_endpoint_snap"] * (hi - lo)
    natural_lo, natural_hi = tp.natural_domain
    if cut_lo and math.isfinite(natural_lo) and lo - natural_lo <= snap:
        lo, cut_lo = natural_lo, False
    if cut_hi and math.isfinite(natural_hi) and natural_hi - hi <= snap:
        hi, cut_hi = natural_hi, False
    logger.debug("truncated u domain %s to (%.6g, %.6g) for E = %.6g", tp.natural_domain, lo, hi, energy)
    return replace(tp, u_domain=(lo, hi), truncated=(cut_lo, cut_hi), energy=float(energy))


def transform(V: LaurentPoly, f: DeformingFunction, energy: float = 0.0) -> TransformedProblem:
    """Maps a deformed problem to a truncated constant-mass problem.

    Examples:
        >>> from pdmqes.symbolic import BaseCoordinate, DeformingFunction, LaurentPoly
        >>> base = BaseCoordinate.half_line()
        >>> tp = transform(LaurentPoly({-2: 2, 2: 1}, base), DeformingFunction.linear(1, base))
        >>> tp.natural_domain
        (0.0, inf)

    Args:
        V: The potential.
        f: The deforming function.
        energy: The energy estimate used to place the cuts.

    Raises:
        UnsupportedDeformation: If f is not one of the admitted shapes.
        TruncationInsufficient: If the potential is unbounded below at an end.

    Returns:
        The transformed problem.

    """
    if not isinstance(f, DeformingFunction):
        raise UnsupportedDeformation(f"no coordinate map for {f!r}")
    if V.base != f.base:
        raise ValueError("V and f live on different base coordinates")
    natural = CoordinateMap(f).natural_domain
    tp = TransformedProblem(V, f, natural, natural, (False, False), float(energy))
    return truncation(tp, energy)
