"""Exception types raised across the package."""


class CellIdealError(Exception):
    """Base class for all errors raised by cellideals."""


class EmptyCollection(CellIdealError):
    pass


class NotAnInterval(CellIdealError):
    pass


class UnknownVertex(CellIdealError):
    pass


class UnknownVariable(CellIdealError):
    pass


class NotAStack(CellIdealError):
    pass


class NotAdmissible(CellIdealError):
    pass


class OracleInapplicable(CellIdealError):
    pass


class OracleDisagreement(CellIdealError):
    """Two independent routes to the same fact produced different answers."""


class TooLarge(CellIdealError):
    """A brute-force oracle would exceed its hard size cap."""


class Cancelled(CellIdealError):
    pass


class ParseError(CellIdealError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class CancelToken:
    """Cooperative cancellation flag checked by long-running builders."""

    def __init__(self):
        self._cancelled = False

    def cancel(self):
        self._cancelled = True

    @property
    def cancelled(self):
        return self._cancelled

    def check(self):
        if self._cancelled:
            raise Cancelled("computation cancelled by caller")


def check_cancel(token):
    if token is not None:
        token.check()


class ExponentOverflow(CellIdealError):
    """An exponent or total degree left the supported 31-bit range."""
