"""Exception hierarchy.

Two top-level families matter to callers (and to the CLI exit codes):
``InputError`` for malformed data that never made it into a valid object,
and ``InvariantError`` for structurally well-formed data that violates a
mathematical invariant.
"""


class InputError(ValueError):
    """Malformed input: bad file, bad literal, reference to a missing simplex."""


class InvariantError(ValueError):
    """A mathematical invariant or precondition is violated."""


class DimensionError(InvariantError):
    """Degree/dimension out of range for the requested operation."""


class DomainMismatchError(InvariantError):
    """A chain, cochain or fiber element lives over the wrong object."""


class GluingError(InvariantError):
    """Boundary circles do not match up for gluing."""


class InvalidSiteError(InvariantError):
    """A surgery site does not satisfy the site invariants."""


class NotACocycleError(InvariantError):
    """A cochain expected to be closed has non-zero coboundary."""


class NotAHomomorphismError(InvariantError):
    """A generator assignment violates an order obstruction."""


class InvalidClassError(InvariantError):
    """An extension-class datum is not compatible with the group data."""


class NotMonoidalError(InvariantError):
    """A functor violates the monoidal (associativity/unit/symmetry) axioms."""
