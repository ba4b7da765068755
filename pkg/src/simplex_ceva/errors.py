"""Exception hierarchy shared by every module of the package."""


class CevaError(ValueError):
    """Base class for all domain errors raised by simplex_ceva."""


class ParseError(CevaError):
    """Malformed rational literal, face, point or instance payload."""


class ZeroMass(CevaError):
    pass


class MissingFoot(CevaError):
    pass


class BadSupport(CevaError):
    """A foot is not strictly interior to the face complementary to its apex."""


class DimensionMismatch(CevaError):
    pass


class NotInterior(CevaError):
    pass


class ClosureAmbiguous(CevaError):
    """Some face interior holds zero or several multipede-closure points."""

    def __init__(self, face, points):
        self.face = face
        self.points = list(points)
        super().__init__(
            f"face {list(face.indices)} holds {len(self.points)} closure points, expected 1")


class PrecedenceViolation(CevaError):
    pass


class MissingEdgePoint(CevaError):
    pass


class TheoremViolation(AssertionError):
    """Conditions (1) and (2) disagree on an instance.

    Carries the offending family and both answers so the instance can be
    replayed with ``simplex-ceva check``.
    """

    def __init__(self, family, intersects, failing_faces):
        self.family = family
        self.intersects = intersects
        self.failing_faces = list(failing_faces)
        super().__init__(
            f"intersects={intersects} but {len(self.failing_faces)} failing l-faces "
            f"(n={family.ambient_n}, k={family.uniform_k})")
