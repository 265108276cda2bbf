"""Exception hierarchy shared by the library and the CLI."""


class TriplesysError(Exception):
    pass


class UsageError(TriplesysError, ValueError):
    """Wrong arity, mismatched spaces, wrong algebra kind."""


class PreconditionError(TriplesysError):
    """An input fails the mathematical precondition of an operation."""


class ConsistencyError(TriplesysError):
    """An internal invariant broke (e.g. a coboundary left the cochain space)."""


class ParseError(TriplesysError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ValidationError(TriplesysError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
