"""The module containing the spectral `oracle`.

An independent numerical eigensolver: the deformed problem is mapped to a
constant-mass problem and discretized, never consulting the closed forms.

Classes:
    CoordinateMap: The maps u(x) and x(u) with du = dx/f.
    TransformedProblem: The truncated constant-mass problem.
    SpectrumResult: The lowest levels with error estimates.
    VerificationReport: The outcome of the verification suite.
    Arbitration: The numerical ground state against candidate values.

Methods:
    transform(V, f), solve(tp, k), solve_starting(sp, k),
    count_bound_levels(tp, threshold), eigenvectors_on_x(result, tp),
    verify_instance(instance), arbitrate_kc(instance), verify_figures()

"""

from .transform import CoordinateMap, TransformedProblem, transform, truncation
from .solver import SpectrumResult, solve, solve_starting, count_bound_levels, eigenvectors_on_x
from .verify import VerificationReport, Arbitration, verify_instance, arbitrate_kc, verify_figures

__all__ = [
    "CoordinateMap",
    "TransformedProblem",
    "transform",
    "truncation",
    "SpectrumResult",
    "solve",
    "solve_starting",
    "count_bound_levels",
    "eigenvectors_on_x",
    "VerificationReport",
    "Arbitration",
    "verify_instance",
    "arbitrate_kc",
    "verify_figures",
]
