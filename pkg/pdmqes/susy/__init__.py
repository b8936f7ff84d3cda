"""The module containing the deformed `susy` engine.

Classes:
    SusyPair: A superpotential with its two partner potentials.
    GeneratingPair: The generating functions W+ and W- with the energy gap.
    WavefunctionForm: A closed-form unnormalized eigenfunction.
    BoundaryProbe: The boundary ladder of one domain end.

Methods:
    riccati_v1(W, f), partner_v2(W, f):
        The partner potentials W^2 -/+ f dW/dx.
    susy_pair(W, f, E0):
        A validated SusyPair.
    generating_pair_from_wplus(Wplus, f):
        The complementary function W- and the gap of a generating function.
    superpotentials_from_generating(gp):
        The superpotentials W and W' of the two hierarchy steps.
    effective_potential_bdd(V, f):
        The BenDaniel-Duke effective potential.
    ground_state(W, f), first_excited(gp, Wprime, f):
        The closed-form eigenfunctions.
    hamiltonian_residual(psi, V, f, E, probe_points):
        Relative residuals of the deformed Schrödinger equation.
    node_count(psi), boundary_decay(psi):
        Numerical structure probes of closed-form eigenfunctions.

"""

from .engine import (
    SusyPair,
    GeneratingPair,
    riccati_v1,
    partner_v2,
    susy_pair,
    generating_pair_from_wplus,
    superpotentials_from_generating,
    effective_potential_bdd,
)
from .wavefunctions import (
    WavefunctionForm,
    BoundaryProbe,
    ground_state,
    first_excited,
    hamiltonian_residual,
    count_sign_changes,
    node_count,
    boundary_decay,
)

__all__ = [
    "SusyPair",
    "GeneratingPair",
    "riccati_v1",
    "partner_v2",
    "susy_pair",
    "generating_pair_from_wplus",
    "superpotentials_from_generating",
    "effective_potential_bdd",
    "WavefunctionForm",
    "BoundaryProbe",
    "ground_state",
    "first_excited",
    "hamiltonian_residual",
    "count_sign_changes",
    "node_count",
    "boundary_decay",
]
