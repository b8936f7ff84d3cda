"""The module containing the extension `catalog`.

Classes:
    FamilyInstance: A parameterized extension with its two known eigenstates.
    FigureInstance: A reference instance with its quoted energies.
    StartingPotential: An exactly solvable starting potential.

Methods:
    build_ho(m, alpha, B_top), build_rho(m, alpha, L, B_top),
    build_kc(m, alpha, L, B_top), build_morse(m, alpha, B2minus, B_top):
        The family builders.
    build_instance(spec):
        Builds an instance from a specification dictionary.
    figure_instances():
        The four reference instances.
    published_parameters(...), published_energies(...), published_partner(...):
        The tabulated closed forms used as cross-checks.
    es_energy(sp, n), es_level_count(sp):
        The spectra of the starting potentials.
    parse_instance_spec(data), instance_to_json(instance):
        The JSON interface.

"""

from .families import (
    FamilyInstance,
    FigureInstance,
    angular_L,
    build_ho,
    build_rho,
    build_kc,
    build_morse,
    build_instance,
    figure_instances,
)
from .closed_forms import s_sum, published_parameters, published_energies, published_partner
from .starting import (
    StartingPotential,
    es_energy,
    es_level_count,
    starting_potential_poly,
    reduce_to_start,
)
from .serialize import parse_instance_spec, spec_to_json, instance_to_json

__all__ = [
    "FamilyInstance",
    "FigureInstance",
    "angular_L",
    "build_ho",
    "build_rho",
    "build_kc",
    "build_morse",
    "build_instance",
    "figure_instances",
    "s_sum",
    "published_parameters",
    "published_energies",
    "published_partner",
    "StartingPotential",
    "es_energy",
    "es_level_count",
    "starting_potential_poly",
    "reduce_to_start",
    "parse_instance_spec",
    "spec_to_json",
    "instance_to_json",
]
