"""The module containing the `cdsi` solver.

Classes:
    Constraint: A leftover coefficient equation.
    AnsatzFit: The fitted superpotential, energy and constraints.
    CompatibilitySolution: The pinned parameters of a two-step fit.
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

from .solver import (
    Constraint,
    AnsatzFit,
    CompatibilitySolution,
    Mismatch,
    MismatchReport,
    ansatz_exponents,
    parameter_label,
    fit_ansatz,
    partner_shift,
    hierarchy_gap,
    solve_compatibility,
    ho_m1_closed_form,
    ho_m2_closed_form,
    crosscheck_general_m,
)

__all__ = [
    "Constraint",
    "AnsatzFit",
    "CompatibilitySolution",
    "Mismatch",
    "MismatchReport",
    "ansatz_exponents",
    "parameter_label",
    "fit_ansatz",
    "partner_shift",
    "hierarchy_gap",
    "solve_compatibility",
    "ho_m1_closed_form",
    "ho_m2_closed_form",
    "crosscheck_general_m",
]
