"""
Exception hierarchy for the operad classifier.

Every error carries the CLI exit code it maps to: 1 for usage / unknown
names, 2 for malformed input, 3 for internal invariant violations.
"""


class OperadError(Exception):
    """Base class for all classifier errors"""
    exit_code = 3


class UsageError(OperadError):
    exit_code = 1


class UnknownNameError(OperadError, LookupError):
    """Unknown catalog name or case id"""
    exit_code = 1


class InputFormatError(OperadError, ValueError):
    """Malformed ideal / matrix file"""
    exit_code = 2


class PolynomialSyntaxError(InputFormatError):
    """Text does not conform to the polynomial grammar"""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownVariableError(InputFormatError):
    def __init__(self, name: str, position: int = -1):
        self.name = name
        self.position = position
        where = f" at position {position}" if position >= 0 else ""
        super().__init__(f"unknown variable '{name}'{where}")


class PivotStructureError(InputFormatError):
    """Matrix is not in row canonical form with unit pivots"""


class VariableSetMismatchError(OperadError, ValueError):
    pass


class ZeroPolynomialError(OperadError, ValueError):
    pass


class ZeroRelationError(OperadError, ValueError):
    pass


class NonConstantEntryError(OperadError, ValueError):
    pass


class DimensionMismatchError(OperadError, ValueError):
    pass


class InvalidPatternError(OperadError, ValueError):
    pass


class RankError(OperadError, ValueError):
    pass


class EnumerationBoundError(OperadError, ValueError):
    pass


class InconsistentConstraintsError(OperadError, ValueError):
    """Associativity conditions admit no solution"""


class UnassignedParameterError(OperadError, ValueError):
    pass


class InvariantViolationError(OperadError, AssertionError):
    """A transcribed table disagrees with a computed result"""
    exit_code = 3
