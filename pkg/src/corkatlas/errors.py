"""Exception hierarchy shared by all corkatlas modules."""


class CorkAtlasError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(CorkAtlasError):
    """Malformed textual input (PD file, polyhedron file, instance notation...)."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at %s)" % (message, position)
        super().__init__(message)
        self.position = position


# laurent
class NotAlexanderLike(CorkAtlasError):
    """No unit multiple of the polynomial is symmetric with value +-1 at t=1."""


# linkdiag
class InvalidDiagram(CorkAtlasError):
    """Arc incidence of a planar diagram is inconsistent."""


class NotAKnot(CorkAtlasError):
    """Operation requires a one-component diagram."""


class UnknownComponent(CorkAtlasError):
    pass


# polyhedron / shadowmap
class MissingRegion(CorkAtlasError):
    pass


class UnknownRegion(CorkAtlasError):
    pass


class HasBoundary(CorkAtlasError):
    """Cellular homology requires a closed 2-complex (no boundary regions)."""


class NotCollapsible(CorkAtlasError):
    """A region designated for boundary collapse is internal."""


class ParityViolation(CorkAtlasError):
    """Target gleams violate the family's half-integer parity constraint."""


# kirby
class NotTwoHandle(CorkAtlasError):
    pass


class NotBlowDownable(CorkAtlasError):
    pass


class NotCancellable(CorkAtlasError):
    pass


# legendrian / families
class OutOfRegime(CorkAtlasError):
    """Parameters outside the regime in which the operation is defined."""


class ZeroParameter(CorkAtlasError):
    """The parameter m must be nonzero."""


class UnsupportedFamily(CorkAtlasError):
    pass
