# ================================================
# Family Constants
# ================================================


class FAMILY:
    """The supported extension families.

    Examples:
        >>> from pdmqes.constants import FAMILY
        >>> FAMILY.HO
        "ho"

    Attributes:
        HO (str): The deformed linear harmonic oscillator extensions. Equals to `"ho"`.
        RHO (str): The deformed radial harmonic oscillator extensions. Equals to `"rho"`.
        KC (str): The deformed Kepler-Coulomb extensions. Equals to `"kc"`.
        MORSE (str): The deformed Morse extensions. Equals to `"morse"`.

    """

    HO = "ho"
    RHO = "rho"
    KC = "kc"
    MORSE = "morse"

    ALL = (HO, RHO, KC, MORSE)


class BASE_KIND:
    """The supported base coordinates t(x).

    Examples:
        >>> from pdmqes.constants import BASE_KIND
        >>> BASE_KIND.EXPNEG
        "expneg"

    Attributes:
        IDENTITY (str): The coordinate t = x. Equals to `"identity"`.
        EXPNEG (str): The coordinate t = exp(-x). Equals to `"expneg"`.

    """

    IDENTITY = "identity"
    EXPNEG = "expneg"


class SAMPLE_TARGET:
    """The functions the `sample` command can emit.

    Examples:
        >>> from pdmqes.constants import SAMPLE_TARGET
        >>> SAMPLE_TARGET.PSI0
        "psi0"

    Attributes:
        POTENTIAL (str): The extended potential V(x). Equals to `"potential"`.
        PSI0 (str): The ground state. Equals to `"psi0"`.
        PSI1 (str): The first excited state. Equals to `"psi1"`.
        WPLUS (str): The generating function W+(x). Equals to `"wplus"`.

    """

    POTENTIAL = "potential"
    PSI0 = "psi0"
    PSI1 = "psi1"
    WPLUS = "wplus"

    ALL = (POTENTIAL, PSI0, PSI1, WPLUS)


# ================================================
# Command Line Constants
# ================================================


class EXIT_CODE:
    """The exit codes of the command line interface.

    Examples:
        >>> from pdmqes.constants import EXIT_CODE
        >>> EXIT_CODE.USAGE_ERROR
        2

    Attributes:
        SUCCESS (int): Everything passed. Equals to `0`.
        VERIFICATION_FAILURE (int): At least one verification check failed. Equals to `1`.
        USAGE_ERROR (int): Invalid arguments, parameters or spec files. Equals to `2`.

    """

    SUCCESS = 0
    VERIFICATION_FAILURE = 1
    USAGE_ERROR = 2


SCHEMA_VERSION = "1.0"
"""The schema version written into every JSON document."""


# ================================================
# Reference Instances
# ================================================


class FIGURE:
    """The four reference instances and the energies quoted in their captions.

    Each entry holds the instance specification and the caption energies as
    strings of exact rationals.

    Examples:
        >>> from pdmqes.constants import FIGURE
        >>> FIGURE.HO["E0"]
        "0"

    Attributes:
        HO (dict): The harmonic oscillator extension (m=1, alpha=1, B_6=1).
        RHO (dict): The radial oscillator extension (m=1, alpha=1, L=1, B_6=1).
        KC (dict): The Kepler-Coulomb extension (m=1, alpha=1, L=1, B_2=1).
        MORSE (dict): The Morse extension (m=1, alpha=1, B^2=3/4, B_2=1).

    """

    HO = {
        "spec": {"family": "ho", "m": 1, "alpha": "1", "B_top": "1"},
        "E0": "0",
        "E1": "3",
    }
    RHO = {
        "spec": {"family": "rho", "m": 1, "alpha": "1", "L": "1", "B_top": "1"},
        "E0": "9/2",
        "E1": "65/2",
    }
    KC = {
        "spec": {"family": "kc", "m": 1, "alpha": "1", "L": "1", "B_top": "1"},
        "E0": "-99/4",
        "E1": "-45/4",
    }
    MORSE = {
        "spec": {"family": "morse", "m": 1, "alpha": "1", "B2minus": "3/4", "B_top": "1"},
        "E0": "-65/4",
        "E1": "-17/4",
    }

    ALL = (HO, RHO, KC, MORSE)
