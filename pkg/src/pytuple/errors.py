"""Exception hierarchy shared by every pytuple module."""


def show(n):
    """Decimal form of ``n``, or its bit length when too long to print."""
    return str(n) if n.bit_length() < 256 else f"<{n.bit_length()}-bit integer>"


class PytupleError(Exception):
    """Base class for all pytuple errors."""


class DomainError(PytupleError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class BudgetExceeded(PytupleError):
    """Factorization ran out of its effort budget before completing."""

    def __init__(self, n, budget):
        self.n = n
        self.budget = budget
        super().__init__(f"factorization of {show(n)} exceeded budget of {budget} iterations")


class InvalidDelta(PytupleError, ValueError):
    """A delta fails one of the admissibility conditions.

    ``condition`` names the first failed check: ``"not-positive"``,
    ``"not-divisor"``, ``"too-large"`` or ``"parity"``.
    """

    def __init__(self, delta, condition, detail=""):
        self.delta = delta
        self.condition = condition
        msg = f"delta {show(delta)} is invalid ({condition})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class OracleCapExceeded(PytupleError):
    """The brute-force oracle was asked to scan beyond its cap."""


class MagnitudeExceeded(PytupleError):
    """A chain hypotenuse grew past the configured magnitude limit."""
