"""The module containing the finite-difference eigensolver.

The operator -d^2/du^2 + V(x(u)) is discretized with the three-point second
difference on a uniform interior mesh with Dirichlet ends. The lowest levels of
the resulting symmetric tridiagonal matrix come from Sturm-sequence bisection
with inverse iteration.

Classes:
    SpectrumResult: The lowest levels with grid metadata and error estimates.

Methods:
    solve(tp, k):
        The lowest k levels with Richardson extrapolation and a truncation check.
    solve_starting(sp, k):
        The lowest k levels of a starting potential.
    count_bound_levels(tp, threshold):
        The number of levels below a continuum threshold.
    eigenvectors_on_x(result, tp):
        The eigenvectors mapped back to psi = chi / sqrt(f).

"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal

from ..catalog.starting import StartingPotential, starting_potential_poly
from ..config import config
from ..constants import SCHEMA_VERSION
from ..errors import TruncationInsufficient
from ..susy import count_sign_changes
from ..typings import SpectrumAttrs
from ..utils.numbers import format_number
from .transform import TransformedProblem, transform, truncation

logger = logging.getLogger(__name__)

_NODE_FLOOR = 1e-8


@dataclass(frozen=True)
class SpectrumResult:
    """The lowest levels of a transformed problem.

    Attributes:
        eigenvalues (np.ndarray): The eigenvalues of the coarse grid, ascending.
        eigenvectors (np.ndarray): The coarse eigenvectors as columns, normalized
            so that the sum of chi^2 du is one and the largest entry is positive.
        grid (np.ndarray): The coarse u mesh.
        node_counts (List[int]): The sign changes of each eigenvector.
        fine_eigenvalues (np.ndarray): The eigenvalues of the halved step.
        richardson_estimate (np.ndarray): The extrapolated eigenvalues (4 E_fine - E_coarse)/3.
        error_bound (np.ndarray): The differences |E_coarse - E_fine|.
        u_domain (Tuple[float, float]): The truncated u interval.
        truncation_shift (Optional[float]): The largest shift under box enlargement,
            `None` when nothing was truncated or the check was skipped.

    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    grid: np.ndarray
    node_counts: List[int]
    fine_eigenvalues: np.ndarray
    richardson_estimate: np.ndarray
    error_bound: np.ndarray
    u_domain: Tuple[float, float]
    truncation_shift: Optional[float]

    @property
    def grid_points(self) -> int:
        return len(self.grid)

    @property
    def levels(self) -> int:
        return len(self.eigenvalues)

    @property
    def step(self) -> float:
        return (self.u_domain[1] - self.u_domain[0]) / (self.grid_points + 1)

    def to_json(self, digits: Optional[int] = None) -> SpectrumAttrs:
        digits = config["significant_digits"] if digits is None else digits

        def numbers(values):
            return [format_number(float(value), digits) for value in values]

        return {
            "schema_version": SCHEMA_VERSION,
            "eigenvalues": numbers(self.eigenvalues),
            "richardson_estimate": numbers(self.richardson_estimate),
            "error_bound": numbers(self.error_bound),
            "node_counts": list(self.node_counts),
            "grid_points": self.grid_points,
            "u_domain": numbers(self.u_domain),
            "truncation_shift": None if self.truncation_shift is None else format_number(self.truncation_shift, digits),
        }


# ================================================
# Discretization
# ================================================


def _matrix(tp: TransformedProblem, points: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    u = tp.grid(points)
    h = tp.step(points)
    diagonal = 2.0 / h**2 + tp.potential(u)
    off_diagonal = np.full(points - 1, -1.0 / h**2)
    return diagonal, off_diagonal, u, h


def _bisect(diagonal: np.ndarray, off_diagonal: np.ndarray, **kwargs):
    # the default abstol scales with the matrix norm, which the clipped walls inflate
    return eigh_tridiagonal(
        diagonal, off_diagonal, lapack_driver="stebz", tol=config["oracle_eigenvalue_tolerance"], **kwargs
    )


def _eigenvalues(tp: TransformedProblem, points: int, k: int) -> np.ndarray:
    diagonal, off_diagonal, _, _ = _matrix(tp, points)
    return _bisect(diagonal, off_diagonal, eigvals_only=True, select="i", select_range=(0, k - 1))


def _eigenpairs(tp: TransformedProblem, points: int, k: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    diagonal, off_diagonal, u, h = _matrix(tp, points)
    values, vectors = _bisect(diagonal, off_diagonal, select="i", select_range=(0, k - 1))
    vectors = vectors / np.sqrt(h)
    for column in range(vectors.shape[1]):
        if vectors[np.argmax(np.abs(vectors[:, column])), column] < 0:
            vectors[:, column] = -vectors[:, column]
    return values, vectors, u


def _node_count(vector: np.ndarray) -> int:
    significant = np.abs(vector) > _NODE_FLOOR * np.max(np.abs(vector))
    return count_sign_changes(vector[significant])


def _check_request(k: int, points: int):
    if not 1 <= k <= config["oracle_max_levels"]:
        raise ValueError(f"level count must lie in 1..{config['oracle_max_levels']}, got {k}")
    if points < config["oracle_min_grid_points"]:
        raise ValueError(f"at least {config['oracle_min_grid_points']} grid points are needed, got {points}")


# ================================================
# Solvers
# ================================================


def _truncation_shift(tp: TransformedProblem, points: int, k: int, coarse: np.ndarray) -> Optional[float]:
    """The eigenvalue shift when the cut box is enlarged at the same step."""
    if not any(tp.truncated):
        return None
    enlarged = tp.enlarged(config["oracle_box_enlargement"])
    big_points = max(points, int(round(enlarged.width / tp.step(points))) - 1)
    shift = float(np.max(np.abs(_eigenvalues(enlarged, big_points, k) - coarse)))
    if shift > config["oracle_truncation_tolerance"]:
        raise TruncationInsufficient(
            f"enlarging the box {tp.u_domain} by {config['oracle_box_enlargement']} "
            f"moved the eigenvalues by {shift:.3g}"
        )
    return shift


def solve(
    tp: TransformedProblem,
    k: int,
    grid_points: Optional[int] = None,
    check_truncation: bool = True,
) -> SpectrumResult:
    """The lowest k levels of a transformed problem.

    The cuts are first re-placed for the highest level found on the given box,
    then the levels are computed on N and 2N + 1 interior points (halving the
    step) and extrapolated.

    Examples:
        >>> result = solve(transform(instance.V, instance.f), 2)
        >>> abs(result.richardson_estimate[1] - 3.0) < 1e-6
        True

    Args:
        tp: The transformed problem.
        k: The number of levels.
        grid_points: The coarse N. Defaults to the `oracle_grid_points` setting.
        check_truncation: Whether to run the box enlargement check.

    Raises:
        TruncationInsufficient: If the enlargement moves an eigenvalue beyond tolerance.

    Returns:
        The spectrum.

    """
    points = config["oracle_grid_points"] if grid_points is None else grid_points
    _check_request(k, points)

    estimate = _eigenvalues(tp, points, k)
    tp = truncation(tp, float(np.max(estimate)))

    coarse, vectors, grid = _eigenpairs(tp, points, k)
    fine = _eigenvalues(tp, 2 * points + 1, k)
    if np.any(np.diff(coarse) <= 0):
        logger.warning("degenerate eigenvalues %s on the grid of %d points", coarse, points)
    shift = _truncation_shift(tp, points, k, coarse) if check_truncation else None

    result = SpectrumResult(
        eigenvalues=coarse,
        eigenvectors=vectors,
        grid=grid,
        node_counts=[_node_count(vectors[:, level]) for level in range(k)],
        fine_eigenvalues=fine,
        richardson_estimate=(4.0 * fine - coarse) / 3.0,
        error_bound=np.abs(coarse - fine),
        u_domain=tp.u_domain,
        truncation_shift=shift,
    )
    logger.info("solved %d levels on %d points: %s", k, points, result.richardson_estimate)
    return result


def solve_starting(sp: StartingPotential, k: int, grid_points: Optional[int] = None) -> SpectrumResult:
    """The lowest k levels of a starting potential.

    The grid defaults to the `oracle_starting_grid_points` setting: near the
    ends of the deformed oscillator chi behaves like a fractional power of the
    distance to the end, so the extrapolated error only decays like h^1.4.

    """
    V, f, _ = starting_potential_poly(sp)
    points = config["oracle_starting_grid_points"] if grid_points is None else grid_points
    return solve(transform(V, f), k, grid_points=points)


def count_bound_levels(tp: TransformedProblem, threshold: float = 0.0, grid_points: Optional[int] = None) -> int:
    """The number of eigenvalues strictly below a continuum threshold.

    Examples:
        >>> V, f, _ = starting_potential_poly(StartingPotential.kc(Q=10, alpha=1, L=0))
        >>> count_bound_levels(transform(V, f))
        3

    """
    points = config["oracle_grid_points"] if grid_points is None else grid_points
    diagonal, off_diagonal, _, _ = _matrix(tp, points)
    lower = float(np.min(diagonal) - 2.0 * np.max(np.abs(off_diagonal))) - 1.0
    values = _bisect(diagonal, off_diagonal, eigvals_only=True, select="v", select_range=(lower, threshold))
    return int(np.count_nonzero(values < threshold))


def eigenvectors_on_x(result: SpectrumResult, tp: TransformedProblem) -> Tuple[np.ndarray, np.ndarray]:
    """The eigenvectors as psi = chi / sqrt(f) on the mapped x grid.

    Returns:
        The x points and a matrix with one column per level.

    """
    x = tp.x_of_u(result.grid)
    return x, result.eigenvectors / np.sqrt(tp.f.evaluate(x))[:, None]
