"""Exception hierarchy shared by all modules.

Each class carries the process exit status the command-line front end uses
when the error escapes a command.
"""

from __future__ import annotations


class TaylorInterpError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ParseError(TaylorInterpError):
    exit_code = 2


class InvalidSampleSet(TaylorInterpError, ValueError):
    exit_code = 3


class SingularMatrix(TaylorInterpError, ArithmeticError):
    exit_code = 4


class BadArgument(TaylorInterpError, ValueError):
    """Caller supplied an argument outside the operation's domain."""

    exit_code = 5


class DimensionMismatch(BadArgument):
    pass


class InvalidPointCount(BadArgument):
    pass


class InvalidStep(BadArgument):
    pass


class InvalidOrder(BadArgument):
    pass


class InvalidRange(BadArgument):
    pass


class NonFiniteInput(BadArgument):
    pass


class UnknownExperiment(BadArgument):
    pass
