"""Exception hierarchy shared by the solver, the file layer and the CLI."""


class GameError(Exception):
    """Base class for every error raised by this package."""


class ArenaValidationError(GameError):
    """An arena invariant is broken."""

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class MissingOutEdge(ArenaValidationError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} has no outgoing edge", vertex)


class NotBipartite(ArenaValidationError):
    def __init__(self, vertex, target):
        super().__init__(
            f"edge {vertex!r} -> {target!r} connects positions of the same player",
            vertex,
        )
        self.target = target


class OwnershipOverlap(ArenaValidationError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} is owned by both players", vertex)


class OwnershipGap(ArenaValidationError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} is owned by neither player", vertex)


class ValidationError(GameError):
    """A game file or condition payload is semantically invalid."""


class ParseError(GameError):
    """A game file is not valid JSON or does not follow the schema."""


class UnknownLabel(ValidationError):
    def __init__(self, label, where=""):
        suffix = f" in {where}" if where else ""
        super().__init__(f"unknown vertex label {label!r}{suffix}")
        self.label = label


class CapExceeded(GameError):
    """The vertex count is over the configured limit."""

    def __init__(self, n, cap):
        super().__init__(f"{n} vertices exceeds the configured cap of {cap}")
        self.n = n
        self.cap = cap


class OracleScaleExceeded(GameError):
    def __init__(self, n, cap):
        super().__init__(f"oracle supports at most {cap} vertices, got {n}")
        self.n = n
        self.cap = cap


class DomainError(GameError, ValueError):
    """Numeric argument outside the function's domain."""


class InfeasibleSpec(GameError):
    """A generator specification cannot produce a legal game."""


class UnsupportedConversion(GameError):
    pass
