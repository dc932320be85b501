"""Shared tolerances, exceptions and warnings for the IVFF library

Every exception raised by the library derives from IvffError.  DataError
covers problems with the caller's input (bad grades, unknown labels,
inconsistent shapes); InternalError covers broken invariants inside the
library itself, such as an LP that should always be feasible.
"""

EPSILON = 1e-9

class IvffError(Exception):
    """Base class for all IVFF library errors"""
    pass

class DataError(IvffError):
    """Input data is malformed or violates a documented precondition"""
    pass

class InternalError(IvffError):
    """An internal invariant was violated"""
    pass

class OutOfRange(DataError):
    """A membership or non-membership grade lies outside [0, 1]"""
    pass

class IntervalOrder(DataError):
    """An interval has its lower bound above its upper bound"""
    pass

class CubicConstraint(DataError):
    """Upper membership and non-membership cubes sum to more than 1"""
    pass

class NegativeScalar(DataError):
    """A scalar multiplier or exponent is negative"""
    pass

class UnknownLabel(DataError):
    """A linguistic label is not part of the scale"""

    def __init__(self, label, dm = None, row = None, column = None):
        self.label = label
        self.dm = dm
        self.row = row
        self.column = column
        where = ''
        if dm is not None:
            where = f' in matrix {dm} at row {row}, column {column}'
        super(UnknownLabel, self).__init__(f'unknown label {label!r}{where}')

class DimensionMismatch(DataError):
    """Vector or matrix dimensions do not agree"""
    pass

class ShapeMismatch(DataError):
    """Decision matrices do not share the expected shape"""
    pass

class AllColumnsConstant(DataError):
    """Every criterion has zero deviation, so weights are undefined"""
    pass

class EmptyProblem(DataError):
    """The problem has no alternatives, criteria or decision makers"""
    pass

class NoBenefitCriteria(DataError):
    """COPRAS needs at least one criterion marked as benefit"""
    pass

class ZeroCostScore(DataError):
    """A cost index scores zero (or below), leaving the relative degree undefined"""
    pass

class EmptyMask(DataError):
    """A criterion mask selects no criteria"""
    pass

class OverlapError(DataError):
    """A criterion is marked both benefit and cost"""
    pass

class UncoveredCriteria(DataError):
    """Some criteria are neither benefit nor cost"""
    pass

class TooFewAlternatives(DataError):
    """The analysis needs more alternatives than the problem has"""
    pass

class BadPercentage(DataError):
    """Perturbation percentage must lie strictly between 0 and 1"""
    pass

class BadLambda(DataError):
    """Decision-maker influence weights are negative or do not sum to 1"""
    pass

class ProblemSyntaxError(DataError):
    """A problem file could not be parsed"""

    def __init__(self, message, section = None, line = None):
        self.section = section
        self.line = line
        context = []
        if section is not None:
            context.append(f'section {section!r}')
        if line is not None:
            context.append(f'line {line}')
        prefix = f'{", ".join(context)}: ' if context else ''
        super(ProblemSyntaxError, self).__init__(f'{prefix}{message}')

class InfeasibleLp(InternalError):
    """A linear program built from valid inputs turned out infeasible"""
    pass

class SolverError(InternalError):
    """The simplex solver failed to terminate within its pivot budget"""
    pass

class DegenerateValue(UserWarning):
    """An IVFFN whose upper membership and non-membership are both zero"""
    pass
