"""
Custom exceptions
"""
from typing import Optional


class HodgeGamesError(Exception):
    """Base class for every error raised by the toolkit"""

    exit_code: int = 3

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> dict:
        """Machine-readable form used by the CLI --json mode"""
        return {
            "type": type(self).__name__,
            "message": self.message,
            "exit_code": self.exit_code,
        }


class UsageError(HodgeGamesError):
    """Bad command-line usage or out-of-range option"""

    exit_code = 1


# Input errors (exit code 2)

class InputError(HodgeGamesError):
    """Malformed user input: expressions, game documents"""

    exit_code = 2


class ExpressionSyntaxError(InputError):
    """Expression text does not match the grammar"""

    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["offset"] = self.offset
        return data


class UnknownIdentifierError(ExpressionSyntaxError):
    """Identifier is not a declared variable"""


class UnknownFunctionError(ExpressionSyntaxError):
    """Call to a function outside the builtin set"""


class InvalidExponentError(ExpressionSyntaxError):
    """Exponent is not a nonnegative integer literal"""


class GameSpecError(InputError):
    """Game-spec document violates the schema or the game invariants"""

    def __init__(self, message: str, player: Optional[str] = None):
        prefix = f"player '{player}': " if player else ""
        super().__init__(prefix + message)
        self.player = player

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["player"] = self.player
        return data


class StructureMismatchError(InputError):
    """Two games do not share players and variables"""


# Numeric errors (exit code 3)

class NumericError(HodgeGamesError):
    """Failure while computing"""

    exit_code = 3


class EnvironmentBindingError(NumericError):
    """Evaluation environment lacks a variable"""


class NumericDomainError(NumericError):
    """Division by zero or a non-finite intermediate"""


class GridError(NumericError):
    """Invalid lattice or mismatched lattices"""


class PreconditionFailedError(NumericError):
    """Operation precondition does not hold for this game"""


class QuadratureError(NumericError):
    """Adaptive quadrature did not converge"""


class IntegrationError(NumericError):
    """ODE integration produced a non-finite state"""

    def __init__(self, message: str, time: float):
        super().__init__(f"{message} at t={time:.17g}")
        self.time = time

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["time"] = self.time
        return data


class SingularMonodromyError(NumericError):
    """Monodromy matrix lost rank"""


class ConvergenceError(NumericError):
    """Iterative solver failed on every start"""
