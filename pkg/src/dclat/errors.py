"""Exception types shared across the package."""

from __future__ import annotations


class DclatError(Exception):
    """Base class for all library errors."""


class ValidationError(DclatError):
    """A structure or document violates a construction invariant."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(DclatError):
    """Syntactic error in a DCP document."""

    def __init__(self, message: str, line: int, col: int = 1):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class UnknownVertex(DclatError):
    """A vertex label does not belong to the structure."""


class MissingColorMapping(DclatError):
    """A recoloring is undefined on a color that occurs in the structure."""


class NotRanked(DclatError):
    """The poset admits no rank function."""


class NotConnected(DclatError):
    """The poset is not connected."""


class NotConnectedPair(DclatError):
    """The two vertices lie in different connected components."""


class NotALattice(DclatError):
    """Some pair of elements lacks a unique least upper or greatest lower bound."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class NotModular(DclatError):
    """The lattice is not modular."""


class NotDistributive(DclatError):
    """The lattice is not distributive."""


class NotDiamondColored(DclatError):
    """The edge coloring violates the diamond coloring property."""


class IncomparableEndpoints(DclatError):
    """Interval endpoints are not comparable."""


class InvalidDescendantSet(DclatError):
    """The given vertex set is not a valid set of descendants (or ancestors)."""


class SizeCapExceeded(DclatError):
    """An enumeration produced more elements than the configured cap."""


class EnumerationCapExceeded(DclatError):
    """An exhaustive search exceeded its configured cap."""


class NotASublattice(DclatError):
    """Meets or joins of the subset disagree with the parent lattice."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class NotWeakSubposet(DclatError):
    """The candidate order is not contained in the parent order."""


class HypothesisViolated(DclatError):
    """A verification was invoked on inputs that fail its hypotheses."""

    def __init__(self, clause: str):
        self.clause = clause
        super().__init__(clause)


class InvalidSpec(DclatError):
    """A generator specification is malformed."""
