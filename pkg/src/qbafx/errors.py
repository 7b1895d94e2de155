"""Exception types shared across the package.

Every error carries a stable ``code`` string so that callers driving the
CLI or the bindings can dispatch on it without parsing messages.
"""


class QbafxError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "Error"


class DanglingEdge(QbafxError):
    """An attack or support endpoint is not a declared argument."""

    code = "DanglingEdge"


class MissingStrength(QbafxError):
    """An argument lacks an initial strength where one is required."""

    code = "MissingStrength"


class DuplicateArg(QbafxError):
    """The same argument name was declared more than once."""

    code = "DuplicateArg"


class AttackSupportOverlap(QbafxError):
    """The same ordered pair appears both as an attack and as a support."""

    code = "AttackSupportOverlap"


class UnknownArgument(QbafxError):
    """An argument name does not occur in the graph(s) at hand."""

    code = "UnknownArgument"


class CyclicQbaf(QbafxError):
    """An operation that needs an acyclic graph was given a cyclic one."""

    code = "CyclicQbaf"


class OutOfRangeStrength(QbafxError):
    """A strength value lies outside the domain of the chosen semantics."""

    code = "OutOfRangeStrength"


class DomainViolation(QbafxError):
    """An input is outside the mathematical domain of a function."""

    code = "DomainViolation"


class IdCollision(QbafxError):
    """A freshly introduced argument name is already taken."""

    code = "IdCollision"


class TooLarge(QbafxError):
    """An exhaustive computation was requested on an oversized input."""

    code = "TooLarge"


class SchemaError(QbafxError):
    """A document does not match the expected JSON schema."""

    code = "SchemaError"
