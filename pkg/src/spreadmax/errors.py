"""Exception hierarchy for spreadmax.

Input problems (bad matrices, bad intervals, oversized searches) and
verification failures (a stochastic harness beating a proven maximum)
are kept in separate branches so the CLI can map them to distinct exit
codes.
"""


class SpreadmaxError(Exception):
    """Base class for all spreadmax errors."""


class InputError(SpreadmaxError):
    """Invalid input: rejected before any computation runs (CLI exit 2)."""


class VerificationFailure(SpreadmaxError):
    """A verification harness found a violation (CLI exit 1)."""


class NotSquare(InputError):
    pass


class NotSymmetric(InputError):
    pass


class NonUnitVector(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class DegenerateInterval(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class OutOfBox(InputError):
    """A matrix entry lies outside the interval beyond tolerance."""


class NotInteriorEntry(InputError):
    """Segment decomposition needs an entry strictly inside (a, b)."""


class SearchSpaceTooLarge(InputError):
    """Vertex enumeration refused: more than 36 pattern bits."""


class DimensionTooLarge(InputError):
    """Canonicalization over all permutations refused for n > 8."""


class ParseError(InputError):
    """Matrix file could not be parsed; carries 1-based line/column."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class NonConvergence(SpreadmaxError):
    """Jacobi iteration did not converge within the sweep budget."""


class NegativeRadicand(SpreadmaxError):
    """Bound radicand below -1e-12: input is corrupted or asymmetric."""


class MonotonicityViolation(VerificationFailure):
    """Maximal spread failed to increase strictly with the dimension."""

    def __init__(self, message, n=None):
        super().__init__(message)
        self.n = n


class FalsificationFound(VerificationFailure):
    """A harness produced a matrix beating a vertex maximum; carries it."""

    def __init__(self, message, matrix=None):
        super().__init__(message)
        self.matrix = matrix
