"""Exception hierarchy shared by every module.

DomainError covers mathematically meaningful failures (a singular component,
a dependent input set, a stochasticity violation); the command line maps it
to exit code 1.  ParseError covers malformed text input, carries a line
number when one is known, and maps to exit code 2.
"""


class NlaError(Exception):
    pass


class DomainError(NlaError):
    pass


class ParseError(NlaError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# -- fields and polynomials ------------------------------------------------

class FieldMismatch(DomainError):
    pass


class NonPrimeModulus(DomainError):
    pass


class TooFewComponents(DomainError):
    pass


class DuplicateComponent(DomainError):
    pass


class ContainmentViolation(DomainError):
    pass


class DivisionByZeroPolynomial(DomainError):
    pass


class ZeroPolynomial(DomainError):
    pass


class ExactFieldRequired(DomainError):
    pass


# -- spaces, matrices, transformations --------------------------------------

class SpaceMismatch(DomainError):
    pass


class ShapeMismatch(DomainError):
    pass


class DimMismatch(DomainError):
    pass


class NonStrictDims(DomainError):
    pass


class NonSquare(DomainError):
    pass


class SingularComponent(DomainError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"component {index + 1} is singular")


class InvalidAssignment(DomainError):
    pass


class KindMismatch(DomainError):
    pass


class NotABasis(DomainError):
    pass


# -- spectral ----------------------------------------------------------------

class NotDiagonalizable(DomainError):
    pass


class MinimalPolynomialDoesNotSplit(DomainError):
    pass


# -- inner products ----------------------------------------------------------

class UnorderedField(DomainError):
    pass


class DependentInput(DomainError):
    pass


class ZeroVectorInSet(DomainError):
    pass


# -- Markov n-chains ---------------------------------------------------------

class NegativeEntry(DomainError):
    def __init__(self, component, row, col, message=None):
        self.component = component
        self.row = row
        self.col = col
        super().__init__(
            message
            or f"component {component + 1}: negative entry at "
               f"row {row + 1}, column {col + 1}"
        )


class StochasticityViolation(DomainError):
    def __init__(self, component, index, total, message=None):
        self.component = component
        self.index = index
        self.total = total
        super().__init__(
            message
            or f"component {component + 1}: line {index + 1} sums to {total}, "
               f"expected 1"
        )


class ConventionMismatch(DomainError):
    pass


class InvalidProbability(DomainError):
    pass


class RepeatedEigenvalues(DomainError):
    pass


class ComplexSpectrum(DomainError):
    pass


# -- Leontief n-models -------------------------------------------------------

class InvalidExchangeMatrix(DomainError):
    pass


class SingularIMinusC(DomainError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"component {index + 1}: I - C is singular")


class NegativeProduction(DomainError):
    def __init__(self, entries, message=None):
        self.entries = entries
        super().__init__(
            message or f"negative production entries: {entries}"
        )


class InvalidDemand(DomainError):
    pass


# -- file formats ------------------------------------------------------------

class UnknownHeader(ParseError):
    pass


class MalformedScalar(ParseError):
    pass


class ShapeError(ParseError):
    pass


class StrictDimsViolation(ParseError):
    pass
