"""The module containing the package exceptions.

All exceptions derive from `PdmqesError`, so callers may catch the whole
family at once. The command line maps them to the usage exit code.

"""


class PdmqesError(Exception):
    """The base exception of the package."""


# ================================================
# Symbolic Errors
# ================================================


class NotDivisible(PdmqesError):
    """The polynomial has no quotient with a constant remainder."""


class NonElementary(PdmqesError):
    """The integrand would need non-logarithmic transcendental terms."""


# ================================================
# Supersymmetry Errors
# ================================================


class IncompatibleGenerator(PdmqesError):
    """The generating function admits no complementary function."""


class NonPositiveGap(PdmqesError):
    """The generating pair yields a gap E1 - E0 that is not positive."""


class ProbeOutOfDomain(PdmqesError):
    """A residual probe lies too close to or outside the domain."""


# ================================================
# Fitting Errors
# ================================================


class NegativeLeadingCoefficient(PdmqesError):
    """The top potential coefficient admits no real superpotential."""


class NoRealSolution(PdmqesError):
    """The compatibility conditions have no real solution."""


# ================================================
# Catalog Errors
# ================================================


class InvalidParams(PdmqesError):
    """The family parameters violate a precondition."""


class AboveNmax(PdmqesError):
    """The requested level lies above the finite bound state spectrum."""


class InstanceSpecError(PdmqesError):
    """The instance specification cannot be parsed."""


# ================================================
# Oracle Errors
# ================================================


class UnsupportedDeformation(PdmqesError):
    """The deforming function has no closed-form coordinate map."""


class TruncationInsufficient(PdmqesError):
    """Enlarging the truncated box moves the eigenvalues beyond tolerance."""
