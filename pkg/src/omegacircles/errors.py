"""Exception hierarchy shared by the geometry layers."""


class GeometryError(ValueError):
    """A construction cannot be carried out on the given input."""


class DegenerateError(GeometryError):
    """Input is degenerate: coincident points, collinear triples, zero radius."""


class NotOnCurveError(GeometryError):
    """A point expected on a curve (or line) is not incident with it."""


class NoRealIntersection(GeometryError):
    """A line misses a circle; the discriminant is negative."""

    def __init__(self, message, disc=None):
        super().__init__(message)
        self.disc = disc
