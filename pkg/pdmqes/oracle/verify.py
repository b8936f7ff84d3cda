"""The module containing the verification of catalog instances.

Every analytic claim of an instance is checked: the Riccati and partner
identities, the generating pair, the tabulated closed forms, the Hamiltonian
residuals, the node structure and boundary decay of the eigenstates, and the
agreement with the numerical spectrum.

Classes:
    VerificationReport: The outcome of every check on one instance.
    Arbitration: The numerical ground state against two candidate values.

Methods:
    verify_instance(instance):
        Runs the full suite on an instance.
    arbitrate_kc(instance):
        Decides between the derived and the quoted Kepler-Coulomb ground energy.
    verify_figures():
        Runs the suite on the four reference instances.

"""

import logging
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np

from ..catalog import FamilyInstance, figure_instances, published_energies, published_parameters, spec_to_json
from ..config import config
from ..constants import FIGURE, SCHEMA_VERSION
from ..errors import IncompatibleGenerator, NonPositiveGap
from ..susy import (
    WavefunctionForm,
    boundary_decay,
    generating_pair_from_wplus,
    hamiltonian_residual,
    node_count,
    partner_v2,
    riccati_v1,
)
from ..symbolic import LaurentPoly
from ..typings import VerificationAttrs
from ..utils.numbers import Number, format_number
from .solver import SpectrumResult, solve
from .transform import CoordinateMap, transform

logger = logging.getLogger(__name__)

_PROBE_COUNT = 5
_PROBE_FLOOR = 0.1


@dataclass(frozen=True)
class VerificationReport:
    """The outcome of the verification suite on one instance.

    Attributes:
        instance (FamilyInstance): The verified instance.
        checks (Dict[str, bool]): The outcome of every named check.
        energy_errors (List[float]): |E_analytic - E_numeric| for both levels.
        overlaps (List[float]): The overlaps of the analytic and numeric states.
        node_counts (List[int]): The sign changes of the numeric eigenvectors.
        residuals (List[float]): The largest Hamiltonian residual of each state.
        spectrum (SpectrumResult): The numerical spectrum.

    """

    instance: FamilyInstance
    checks: Dict[str, bool]
    energy_errors: List[float]
    overlaps: List[float]
    node_counts: List[int]
    residuals: List[float]
    spectrum: SpectrumResult

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> List[str]:
        return [name for name, ok in self.checks.items() if not ok]

    def to_json(self, digits: Optional[int] = None) -> VerificationAttrs:
        digits = config["significant_digits"] if digits is None else digits
        return {
            "schema_version": SCHEMA_VERSION,
            "spec": spec_to_json(self.instance.spec, digits),
            "checks": dict(self.checks),
            "energy_errors": [format_number(value, digits) for value in self.energy_errors],
            "overlaps": [format_number(value, digits) for value in self.overlaps],
            "node_counts": list(self.node_counts),
            "passed": self.passed,
        }


# ================================================
# Symbolic Checks
# ================================================


def _magnitude(*polys: LaurentPoly) -> float:
    return max((abs(float(c)) for poly in polys for _, c in poly.items()), default=0.0)


def _same(left: LaurentPoly, right: LaurentPoly, scale: Optional[float] = None) -> bool:
    """Exact equality, or agreement relative to the coefficient scale for floats."""
    if left.is_exact and right.is_exact:
        return left == right
    scale = _magnitude(left, right) if scale is None else scale
    return left.almost_equal(right, config["float_coefficient_tolerance"] * max(1.0, scale))


def _close(left: Number, right: Number, scale: Optional[float] = None) -> bool:
    if isinstance(left, Fraction) and isinstance(right, Fraction):
        return left == right
    scale = max(abs(float(left)), abs(float(right))) if scale is None else scale
    return abs(float(left) - float(right)) <= config["float_coefficient_tolerance"] * max(1.0, scale)


def _ring_checks(instance: FamilyInstance) -> Dict[str, bool]:
    f = instance.f
    checks = {"riccati": _same(riccati_v1(instance.W, f) + instance.E0, instance.V)}
    v2 = partner_v2(instance.W, f)
    difference = v2 - riccati_v1(instance.Wprime, f)
    # float instances leave rounding residue in the cancelled powers
    scale = _magnitude(v2)
    checks["partner"] = _same(difference.without_constant(), LaurentPoly.zero(difference.base), scale) and _close(
        difference.constant_term, instance.gap, scale
    )
    try:
        pair = generating_pair_from_wplus(instance.Wplus, f)
        checks["generating_pair"] = _same(pair.Wminus, instance.Wminus) and _close(pair.gap, instance.gap)
    except (IncompatibleGenerator, NonPositiveGap):
        checks["generating_pair"] = False
    published = published_parameters(
        instance.family, instance.m, instance.alpha, instance.B_top, L=instance.L, B2minus=instance.B2minus
    )
    E0, E1 = published_energies(
        instance.family, instance.m, instance.alpha, instance.B_top, L=instance.L, B2minus=instance.B2minus
    )
    checks["closed_forms"] = _same(published, instance.V) and _close(E0, instance.E0) and _close(E1, instance.E1)
    return checks


# ================================================
# Numerical Checks
# ================================================


def _sampled_chi(psi: WavefunctionForm, x: np.ndarray, step: float) -> np.ndarray:
    """The analytic chi = sqrt(f) psi on the grid, normalized to unit norm."""
    log_chi = psi.log_abs(x) + 0.5 * psi.f.log_value(x)
    log_chi = np.where(np.isfinite(log_chi), log_chi, -np.inf)
    chi = psi.sign(x) * np.exp(log_chi - np.max(log_chi))
    return chi / np.sqrt(np.sum(chi**2) * step)


def _probe_points(chi: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Evenly spread probes where |chi| stays above a tenth of its maximum."""
    candidates = x[np.abs(chi) >= _PROBE_FLOOR * np.max(np.abs(chi))]
    return candidates[np.linspace(0, len(candidates) - 1, _PROBE_COUNT + 2).astype(int)[1:-1]]


def verify_instance(instance: FamilyInstance, grid_points: Optional[int] = None) -> VerificationReport:
    """Runs the verification suite on an instance.

    Examples:
        >>> report = verify_instance(build_ho(1, 1, 1))
        >>> report.passed, report.node_counts
        (True, [0, 1])

    Args:
        instance: The instance.
        grid_points: The coarse oracle grid. Defaults to the `oracle_grid_points` setting.

    Raises:
        TruncationInsufficient: If the oracle box is too small.

    Returns:
        The report.

    """
    logger.info("verifying %s", instance.spec)
    checks = _ring_checks(instance)

    spectrum = solve(transform(instance.V, instance.f), 2, grid_points=grid_points)
    x = CoordinateMap(instance.f).x_of_u(spectrum.grid)
    energies = (instance.E0, instance.E1)
    states = (instance.psi0, instance.psi1)

    energy_errors = [abs(float(E) - float(numeric)) for E, numeric in zip(energies, spectrum.richardson_estimate)]
    chis = [_sampled_chi(psi, x, spectrum.step) for psi in states]
    overlaps = [
        float(abs(np.sum(chi * spectrum.eigenvectors[:, level]) * spectrum.step)) for level, chi in enumerate(chis)
    ]

    residuals = [
        float(np.max(hamiltonian_residual(psi, instance.V, instance.f, E, _probe_points(chi, x))))
        for psi, E, chi in zip(states, energies, chis)
    ]

    for level, name in enumerate(("E0", "E1")):
        checks[f"residual_{name}"] = residuals[level] <= config["residual_tolerance"]
    checks["nodes_analytic"] = node_count(instance.psi0) == 0 and node_count(instance.psi1) == 1
    checks["boundary_decay"] = all(probe.decays for psi in states for probe in boundary_decay(psi))
    for level, name in enumerate(("E0", "E1")):
        checks[f"energy_{name}"] = energy_errors[level] <= config["energy_tolerance"]
        checks[f"overlap_{name}"] = overlaps[level] >= config["overlap_threshold"]
    checks["nodes_numeric"] = list(spectrum.node_counts) == [0, 1]

    report = VerificationReport(
        instance=instance,
        checks=checks,
        energy_errors=energy_errors,
        overlaps=overlaps,
        node_counts=list(spectrum.node_counts),
        residuals=residuals,
        spectrum=spectrum,
    )
    if report.passed:
        logger.info("all %d checks passed", len(checks))
    else:
        logger.info("failed checks: %s", ", ".join(report.failures))
    return report


# ================================================
# Arbitration
# ================================================


@dataclass(frozen=True)
class Arbitration:
    """The numerical ground state energy against candidate values.

    Attributes:
        numeric (float): The extrapolated numerical ground state energy.
        candidates (Dict[str, Fraction]): The candidate values by name.
        matches (List[str]): The candidates within the energy tolerance.

    """

    numeric: float
    candidates: Dict[str, Number]
    matches: List[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if not self.matches:
            return "no candidate matches"
        return " and ".join(f"{name} ({self.candidates[name]})" for name in self.matches)


def arbitrate_kc(
    instance: FamilyInstance,
    caption_E0: Optional[Number] = None,
    grid_points: Optional[int] = None,
    spectrum: Optional[SpectrumResult] = None,
) -> Arbitration:
    """Compares the numerical ground state with the derived and the quoted energies.

    Examples:
        >>> arbitrate_kc(build_kc(1, 1, 1, 1)).matches
        ['derived']

    Args:
        instance: The instance.
        caption_E0: The quoted value. Defaults to the Kepler-Coulomb reference caption.
        grid_points: The coarse oracle grid.
        spectrum: An already computed spectrum of the instance.

    Returns:
        The arbitration.

    """
    caption_E0 = Fraction(FIGURE.KC["E0"]) if caption_E0 is None else caption_E0
    if spectrum is None:
        spectrum = solve(transform(instance.V, instance.f), 1, grid_points=grid_points)
    numeric = float(spectrum.richardson_estimate[0])
    candidates = {"derived": instance.E0, "caption": caption_E0}
    matches = [
        name for name, value in candidates.items() if abs(numeric - float(value)) <= config["energy_tolerance"]
    ]
    logger.info("numerical E0 = %.10g matches %s", numeric, matches or "nothing")
    return Arbitration(numeric, candidates, matches)


def verify_figures(grid_points: Optional[int] = None) -> List[VerificationReport]:
    """Runs the suite on the four reference instances, warning on caption disagreements."""
    reports = []
    for figure in figure_instances():
        if not figure.agrees:
            warnings.warn(
                f"{figure.name}: the instance gives E0 = {figure.instance.E0}, E1 = {figure.instance.E1} "
                f"while the caption quotes E0 = {figure.caption_E0}, E1 = {figure.caption_E1}"
            )
        reports.append(verify_instance(figure.instance, grid_points=grid_points))
    return reports
