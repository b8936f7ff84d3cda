"""Parsing of instance specifications and JSON output of built instances."""

import math
from fractions import Fraction
from typing import Any, Dict, Mapping

from ..config import config
from ..constants import FAMILY, SCHEMA_VERSION
from ..errors import InstanceSpecError
from ..typings import InstanceAttrs, InstanceSpecAttrs
from ..utils.numbers import format_number, to_number

_REQUIRED = {
    FAMILY.HO: ("family", "m", "alpha", "B_top"),
    FAMILY.RHO: ("family", "m", "alpha", "L", "B_top"),
    FAMILY.KC: ("family", "m", "alpha", "L", "B_top"),
    FAMILY.MORSE: ("family", "m", "alpha", "B2minus", "B_top"),
}

_ALIASES = {"B": "B2minus", "Btop": "B_top"}


def _parse_number(key: str, value: Any):
    """Reads a spec number; decimal floats are taken at their written value."""
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InstanceSpecError(f"{key} must be finite, got {value}")
        return Fraction(repr(value))
    try:
        return to_number(value)
    except (TypeError, ValueError) as error:
        raise InstanceSpecError(f"{key}: {error}") from error


def parse_instance_spec(data: Mapping[str, Any]) -> Dict[str, Any]:
    """Validates an instance specification and converts its numbers.

    The keys `B` and `Btop` are accepted as aliases of `B2minus` and `B_top`.

    Examples:
        >>> parse_instance_spec({"family": "morse", "m": 1, "alpha": 1, "B2minus": 0.75, "B_top": "1"})
        {'family': 'morse', 'm': 1, 'alpha': Fraction(1, 1), 'B2minus': Fraction(3, 4), 'B_top': Fraction(1, 1)}

    Args:
        data: The raw specification.

    Raises:
        InstanceSpecError: If a key is missing, unknown or malformed.

    Returns:
        The specification with an int `m` and Fraction parameters.

    """
    if not isinstance(data, Mapping):
        raise InstanceSpecError("the instance specification must be a JSON object")
    data = {_ALIASES.get(key, key): value for key, value in data.items() if value is not None}
    family = data.get("family")
    if family not in _REQUIRED:
        raise InstanceSpecError(f"family must be one of {', '.join(FAMILY.ALL)}, got {family!r}")

    required = _REQUIRED[family]
    missing = [key for key in required if key not in data]
    if missing:
        raise InstanceSpecError(f"missing keys for {family}: {', '.join(missing)}")
    unknown = [key for key in data if key not in required]
    if unknown:
        raise InstanceSpecError(f"unknown keys for {family}: {', '.join(sorted(unknown))}")

    m = data["m"]
    if isinstance(m, str) and m.strip().lstrip("-").isdigit():
        m = int(m)
    if isinstance(m, bool) or not isinstance(m, int):
        raise InstanceSpecError(f"m must be an integer, got {m!r}")

    spec = {"family": family, "m": m}
    for key in required[2:]:
        spec[key] = _parse_number(key, data[key])
    return spec


def spec_to_json(spec: Mapping[str, Any], digits: int = None) -> InstanceSpecAttrs:
    """The JSON form of a parsed specification, numbers as strings."""
    digits = config["significant_digits"] if digits is None else digits
    return {
        key: value if key in ("family", "m") else format_number(value, digits)
        for key, value in spec.items()
    }


def instance_to_json(instance, digits: int = None) -> InstanceAttrs:
    """The JSON description of a family instance.

    Examples:
        >>> document = instance_to_json(build_ho(1, 1, 1))
        >>> document["E0"], document["E1"], document["V"]
        ('0', '3', {'2': '-3', '4': '-3', '6': '1'})
        >>> document = instance_to_json(build_morse(1, 1, Fraction(3, 4), 1))
        >>> document["E0"], document["E0_exact"]
        ('-16.25', '-65/4')

    Args:
        instance: The `FamilyInstance`.
        digits: The significant digits of float values. Defaults to the
            `significant_digits` setting.

    Returns:
        The document. Energies are printed as decimals, with the exact
        values repeated as reduced fractions in the `*_exact` fields; the
        polynomial coefficients keep their exact form.

    """
    digits = config["significant_digits"] if digits is None else digits
    domain = [None if math.isinf(end) else end for end in instance.base.x_domain]
    return {
        "schema_version": SCHEMA_VERSION,
        "spec": spec_to_json(instance.spec, digits),
        "base": instance.base.kind,
        "domain": domain,
        "f": instance.f.poly.to_json(digits),
        "V": instance.V.to_json(digits),
        "W": instance.W.to_json(digits),
        "Wprime": instance.Wprime.to_json(digits),
        "Wplus": instance.Wplus.to_json(digits),
        "Wminus": instance.Wminus.to_json(digits),
        "E0": format_number(float(instance.E0), digits),
        "E1": format_number(float(instance.E1), digits),
        "gap": format_number(float(instance.gap), digits),
        "E0_exact": format_number(instance.E0, digits),
        "E1_exact": format_number(instance.E1, digits),
        "gap_exact": format_number(instance.gap, digits),
        "psi0": instance.psi0.to_json(digits),
        "psi1": instance.psi1.to_json(digits),
        "partner": instance.partner_coeffs.to_json(digits),
        "R": format_number(instance.R, digits),
        "Delta": None if instance.Delta is None else format_number(instance.Delta, digits),
    }
