"""Exception types shared across the toolkit."""


class TournamentError(Exception):
    """Base class for every error raised by mtour."""


class MissingArc(TournamentError):
    """A cross-part vertex pair has no arc in either direction."""


class DoubleArc(TournamentError):
    """Both directions of a vertex pair are present."""


class IntraPartArc(TournamentError):
    """An arc joins two vertices of the same partite set (or is a loop)."""


class EmptyPart(TournamentError):
    """A partite set has no vertices."""


class NotStrong(TournamentError):
    """The digraph is not strongly connected where strongness is required."""


class NotRich(TournamentError):
    """A generator produced an instance that is not rich."""


class BadLength(TournamentError):
    """Requested cycle length is out of range."""


class VertexOnCycle(TournamentError):
    """Insertion candidate already lies on the cycle."""


class OverlappingSets(TournamentError):
    """Vertex sets passed to a dominance query are not disjoint."""


class InvalidSpec(TournamentError):
    """Family spec parameters violate the construction rules."""


class GaveUp(TournamentError):
    """Bounded rejection sampling exhausted its retry budget."""


class ParseError(TournamentError):
    """A serialized document could not be parsed."""
