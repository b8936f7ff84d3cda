"""`Pdmqes` constructs quasi-exactly solvable position-dependent-mass problems.

The `pdmqes` package builds, in closed form, Schrödinger problems with a
position-dependent mass whose ground and first excited states are known,
using deformed supersymmetry and generating functions. Every analytic
prediction can be checked against an independent numerical eigensolver.

Modules:
    symbolic: Laurent polynomials in a base coordinate, deforming functions and calculus.
    susy: Riccati relations, generating pairs and closed-form wavefunctions.
    cdsi: Superpotential ansatz fitting and two-step compatibility solving.
    catalog: The extension families and their exactly solvable starting potentials.
    oracle: The independent finite-difference eigensolver and instance verification.
    config: The module containing the numerical settings.
    constants: The module containing the predefined constants.
    typings: The module containing all of the typings used across the module.
    errors: The module containing the package exceptions.
    cli: The command line front end (`pdmqes` or `python -m pdmqes`).

"""

__version__ = "0.1.1"

from . import symbolic
from . import susy
from . import cdsi
from . import catalog
from . import oracle
from . import config
from . import constants
from . import typings
from . import errors


__all__ = [
    "symbolic",
    "susy",
    "cdsi",
    "catalog",
    "oracle",
    "config",
    "constants",
    "typings",
    "errors",
]
