"""Exception types shared across the workbench; the CLI maps them to exit codes."""


class DtopwError(Exception):
    """Base class for all workbench errors."""


class CycleDetected(DtopwError):
    """The given relation forces x <= y <= x for distinct x, y."""


class UnknownLabel(DtopwError):
    """A label was used that does not belong to the carrier."""


class BoundExceeded(DtopwError):
    """An exhaustive enumeration was requested beyond its configured bound."""


class NotDirected(DtopwError):
    """A subset required to be directed is not."""


class InvalidTopology(DtopwError):
    """An open-set family violates the topology or T0 axioms."""


class NotALattice(DtopwError):
    """A poset lacks some binary meet or join (or a bottom/top)."""


class NotDistributive(DtopwError):
    """A lattice operation that requires distributivity was applied to a non-distributive lattice."""


class NotMonotone(DtopwError):
    """An assignment between posets fails to preserve the order."""


class NotAnAdjunction(DtopwError):
    """A pair of monotone maps violates f(x) <= y  iff  x <= g(y)."""


class NotARetraction(DtopwError):
    """The given section/retraction pair does not compose to the identity (or is not continuous)."""


class OracleUnavailable(DtopwError):
    """A presented space does not supply the oracle needed for this query."""


class UnknownName(DtopwError):
    """No gallery space is registered under the given name."""


class ClaimFailed(DtopwError):
    """A gallery claim check failed; carries the failing report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotInFragment(DtopwError):
    """The requested value falls outside the finitely presented closed-set fragment."""


class ParseError(DtopwError):
    """A .poset/.space file is malformed."""


class UnknownProperty(DtopwError):
    """The CLI was asked to check a property it does not know."""
