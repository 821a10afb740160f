class StructuralError(Exception):
    """Operands do not belong to the same registered structure, or a
    payload violates the structure's normal form."""


class RegistrationError(Exception):
    """A structure failed its registration-time verification.

    Carries the failing report (when available) under ``self.report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ContractError(Exception):
    """An operation was called outside its documented precondition."""


class TruncationRequired(Exception):
    """Full materialization of an infinite enumeration was requested."""


class ParseError(Exception):
    """A textual element or configuration could not be parsed."""
