"""Exception hierarchy shared across the library and the CLI exit codes."""


class EccError(Exception):
    """Base class for all library errors."""


class InvalidInputError(EccError, ValueError):
    """An argument is outside the documented domain of an operation."""


class ShapeError(InvalidInputError):
    """Mismatched dimensions or degrees between operands."""


class UnsupportedFieldError(InvalidInputError):
    """Operation is defined for one scalar field only."""


class ValidationError(EccError, ValueError):
    """Input data fails a structural invariant (e.g. non-unit vectors)."""


class ParseError(EccError, ValueError):
    """A collection file could not be parsed."""


class ResourceBudgetError(EccError, RuntimeError):
    """Requested computation exceeds the configured size budget."""


class SingularExpansionError(InvalidInputError):
    """Power series operation at a singular expansion point (f(0) <= 0)."""


# CLI exit codes
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_RESOURCE = 5
