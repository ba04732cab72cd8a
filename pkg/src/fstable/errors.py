"""Exception types shared across the package.

The CLI maps these onto exit codes: input problems (parse and setup
errors) exit 1, resource caps exit 2. Inconclusive verdicts are values,
not exceptions, and exit 3.
"""


class FstableError(Exception):
    """Base class for all package errors."""


class ParseError(FstableError):
    """Rejected text input, with the byte offset of the offending token."""

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        self.message = message
        self.offset = offset
        self.line = line
        super().__init__(str(self))

    def __str__(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.offset is not None:
            where.append(f"byte {self.offset}")
        if where:
            return f"{', '.join(where)}: {self.message}"
        return self.message

    def at_line(self, line: int) -> "ParseError":
        return ParseError(self.message, self.offset, line)


class SetupError(FstableError):
    """Invalid ring or setup data (bad modulus, wrong sequence, and so on)."""


class ResourceLimitError(FstableError):
    """A configured cap was hit before the computation finished.

    ``partial`` carries whatever intermediate object was available when
    the cap fired (a partial basis, chain, or member list), for reporting.
    """

    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)
