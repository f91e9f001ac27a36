"""Exception types shared across the package."""


class CoxeterError(Exception):
    """Base class for every error raised by this package."""


class MalformedMatrix(CoxeterError):
    """The order table is not a valid Coxeter matrix."""


class WordSyntaxError(CoxeterError):
    """A word could not be read as a sequence of declared generators."""


class NotReduced(CoxeterError):
    """An operation requiring a reduced word was given a non-reduced one."""


class CapExceeded(CoxeterError):
    """A closure search or enumeration outgrew its configured node cap.

    This is a refusal to answer, never a wrong answer.
    """


class NumericallyAmbiguous(CoxeterError):
    """A floating-point sign decision fell inside the tolerance band."""


class NotSpherical(CoxeterError):
    """The generator subset does not generate a finite parabolic subgroup."""


class NotNormalising(CoxeterError):
    """The element does not normalise the requested standard parabolic."""


class NotCFC(CoxeterError):
    """The operation is only defined for cyclically fully commutative elements."""


class ReplayError(CoxeterError):
    """A move certificate failed to replay against its start word."""


class InvariantViolation(CoxeterError):
    """An internal runtime invariant check failed; indicates a bug, not bad input."""


class SystemFileError(CoxeterError):
    """A system definition file failed to parse; carries line and column."""

    def __init__(self, message, path="<input>", line=1, column=1):
        super().__init__(f"{path}:{line}:{column}: {message}")
        self.path = path
        self.line = line
        self.column = column
