"""Exceptions shared across the package.

Mathematically meaningful refusals (Unreachable, InfiniteCrossers,
NotLocallyFinite) are distinct from plain usage errors; the CLI maps the
former to exit code 2.
"""


class InfccError(Exception):
    """Base class for all package errors."""


class UnknownFamily(InfccError, ValueError):
    """Triangulation spec names a base family that does not exist."""


class FlipTargetNotMember(InfccError, ValueError):
    """A flip in a build spec targets an arc that is not a member."""


class NotAMember(InfccError, ValueError):
    """Operation requires a member arc of the triangulation."""


class InfiniteCrossers(InfccError):
    """The queried arc crosses infinitely many members.

    Happens exactly when a triangulation with a fountain at n is queried
    with an arc (p, q) straddling it, p < n < q.
    """

    def __init__(self, fountain: int):
        super().__init__(f"infinitely many members crossed (fountain at {fountain})")
        self.fountain = fountain


class Unreachable(InfccError):
    """The arc cannot be reached from the triangulation by finitely many flips."""

    def __init__(self, arc, fountain: int):
        super().__init__(f"arc {tuple(arc)} is unreachable (fountain at {fountain})")
        self.arc = arc
        self.fountain = fountain


class NotLocallyFinite(InfccError):
    """Tiling generation requires a locally finite triangulation."""


class NonAdmissibleFrontier(InfccError, ValueError):
    """Frontier word is malformed or misses the half plane on its window."""


class ExactnessFailure(InfccError):
    """A determinant recurrence produced a non-integer or non-positive value."""


class SupportMeetsU(InfccError, ValueError):
    """A class fails to avoid the subcategory it must be disjoint from."""
