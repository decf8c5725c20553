"""Exception hierarchy shared by the library and the CLI."""


class TwoDiscError(Exception):
    """Base class for every error raised by this package."""


class ParseError(TwoDiscError, ValueError):
    def __init__(self, message, line=None, offset=None):
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class NonFiniteError(TwoDiscError, ValueError):
    pass


class TooFewPointsError(TwoDiscError, ValueError):
    pass


class NonConvexError(TwoDiscError, ValueError):
    pass


class EmptyStreamError(TwoDiscError, ValueError):
    pass


class DegenerateError(TwoDiscError, ArithmeticError):
    """A ratio was requested against a zero lower bound or zero oracle radius."""
