"""Exception taxonomy shared across the package."""


class LeibnizError(Exception):
    """Base class for library-specific errors."""


class FieldMismatch(LeibnizError):
    """Operands belong to different ground fields."""


class FieldParseError(LeibnizError, ValueError):
    """A scalar literal does not denote an element of the declared field."""


class ParseError(LeibnizError, ValueError):
    """An algebra document is malformed.  ``where`` locates the offence."""

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(message if where is None else f"{where}: {message}")


class ZeroPolynomial(LeibnizError, ValueError):
    """The zero polynomial was passed where a nonzero one is required."""


class UnsupportedFactorization(LeibnizError):
    """Factorization outside the supported range (rationals, degree > 4)."""


class ShapeMismatch(LeibnizError, ValueError):
    """Vector/matrix dimensions do not line up."""


class AmbientMismatch(ShapeMismatch):
    """Two subspaces live in different ambient spaces or fields."""


class NoSolution(LeibnizError):
    """A linear system has no solution."""


class NotLeibniz(LeibnizError):
    """A structure-constant table violates the Leibniz identity."""

    def __init__(self, violation):
        self.violation = violation
        super().__init__(f"Leibniz identity fails at basis triple {violation.triple}")


class NotASubalgebra(LeibnizError):
    """The subspace is not closed under the product."""


class NotAnIdeal(LeibnizError):
    """The subspace is not a two-sided ideal."""


class NotSolvable(LeibnizError):
    """The algebra is not solvable but the operation requires it."""


class NotDecomposing(LeibnizError):
    """A Fitting-style pair fails to decompose the space."""


class DecompositionFailed(LeibnizError):
    """A decomposition was computed but its invariants do not hold."""


class CartanSearchFailed(LeibnizError):
    """No Cartan subalgebra was found within the search budget."""


class InfiniteFieldUnsupported(LeibnizError):
    """Subspace enumeration needs a finite ground field."""


class BudgetExceeded(LeibnizError):
    """The enumeration would visit more subspaces than the budget allows."""

    def __init__(self, needed, budget):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} subspaces, budget is {budget}")


class BadSpec(LeibnizError, ValueError):
    """A construction spec (cyclic algebra, field name, ...) is invalid."""
