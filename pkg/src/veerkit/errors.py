"""Exception types shared across the package."""


class VeerkitError(Exception):
    """Base class for all veerkit errors."""


class MalformedSignature(VeerkitError):
    """The signature string does not lex/parse as a taut isoSig."""


class AngleLengthMismatch(MalformedSignature):
    """Angle string length differs from the tetrahedron count."""


class InvalidGluing(VeerkitError):
    """Decoded gluing data is not a face-pairing involution."""


class NotTaut(VeerkitError):
    """A structural check failed where a taut angle structure was required."""


class NotTransverse(VeerkitError):
    """Co-orientation propagation hit a parity contradiction."""


class NotVeering(VeerkitError):
    """Edge-colour propagation failed.

    ``reason`` is ``"conflict"`` with the offending edge class, or
    ``"unconstrained"`` when some edge class is never equatorial.
    """

    def __init__(self, reason, edge_class=None):
        self.reason = reason
        self.edge_class = edge_class
        msg = reason if edge_class is None else f"{reason} at edge class {edge_class}"
        super().__init__(msg)


class BadTetIndex(VeerkitError):
    """Tetrahedron index out of range."""


class NotAMouth(VeerkitError):
    """Landfill requested at an edge that is a fall or a watershed."""


class NotConvex(VeerkitError):
    """Operation requires a convex continent."""


class FaceNotOnBoundary(VeerkitError):
    """The given face is not on the requested boundary landscape."""


class ForkedRiverHasNoComplexity(VeerkitError):
    """Complexity is defined for plain rivers only."""


class EdgeNotInContinent(VeerkitError):
    """The given edge has not been developed in this continent."""


class DepthExhausted(VeerkitError):
    """A comparison or growth loop hit the session depth cap."""


class InsufficientContinent(VeerkitError):
    """The continent's interior does not cover every cell orbit."""
