"""Exception hierarchy shared by every saxshape module."""


class SaxError(Exception):
    """Base class for all saxshape errors."""


class InvalidInputError(SaxError, ValueError):
    pass


class UnsupportedAlphabetError(InvalidInputError):
    pass


class EmptyShapeError(InvalidInputError):
    pass


class DegenerateShapeError(InvalidInputError):
    pass


class DegenerateClassError(InvalidInputError):
    def __init__(self, label, message=None, conflicts=None):
        self.label = label
        self.conflicts = conflicts or {}
        super().__init__(message or f"class {label!r} has no words left after conflict removal")


class ParseError(SaxError, ValueError):
    """Malformed input document.

    ``offset`` is a byte offset (binary formats) and ``line`` a 1-based line
    number (text formats); whichever does not apply is None.
    """

    def __init__(self, message, *, offset=None, line=None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
