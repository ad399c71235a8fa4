"""Exception types raised across the package."""


class SwitchIsoError(Exception):
    """Base class for all errors raised by switchiso."""


class InvalidEdge(SwitchIsoError):
    """Edge is a loop or names a vertex outside 0..n-1."""


class DuplicateEdge(SwitchIsoError):
    """The same unordered pair appears twice."""


class UnknownGraph(SwitchIsoError):
    """Builtin graph name not recognised."""


class InvalidParam(SwitchIsoError):
    """Parameter outside its documented range."""


class TooLarge(SwitchIsoError):
    """Input exceeds an enumeration guard."""


class NotAnEdge(SwitchIsoError):
    """Vertex pair is not an edge of the graph."""


class InvalidVertex(SwitchIsoError):
    """Vertex outside 0..n-1."""


class GraphMismatch(SwitchIsoError):
    """Operands belong to different graphs."""


class NotAutomorphism(SwitchIsoError):
    """Vertex mapping does not preserve the edge set."""
