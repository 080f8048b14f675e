"""Exception hierarchy shared by every ckgraph module."""


class CKGraphError(ValueError):
    """Base class for all library errors."""


class InvalidSymbolError(CKGraphError):
    """A symbol lies outside the alphabet {0, ..., d}."""


class InvalidLabelError(CKGraphError):
    """A label violates the validity rule required by an operation."""


class InvalidSwapError(CKGraphError):
    """A replacement symbol equals one of its cyclic neighbours."""


class DomainError(CKGraphError):
    """Parameters fall outside the domain where an operation is defined."""


class OutOfRangeError(DomainError):
    """A closed-form count was requested outside its range of validity."""


class BuildError(CKGraphError):
    """An arc refers to a vertex that is not part of the digraph."""


class PreconditionError(CKGraphError):
    """Input to a graph operator does not satisfy its precondition."""


class ContractError(CKGraphError):
    """A caller-supplied callback broke the contract of an operator."""


class UnknownVertexError(CKGraphError, KeyError):
    """Lookup of a vertex that is not in the digraph."""

    def __str__(self) -> str:
        return ValueError.__str__(self)
