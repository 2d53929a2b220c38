"""Exception types shared by the numeric modules."""


class DomainError(ValueError):
    """An argument lies outside the region where a formula is defined."""


class DivergenceError(DomainError):
    """A power series was asked to sum outside its disc of convergence."""


class ConvergenceError(ArithmeticError):
    """An iteration did not reach its tolerance within the allowed budget."""


class BudgetExhaustedError(ConvergenceError):
    """Adaptive subdivision ran out of recursion depth or panels."""


class NonFiniteError(ArithmeticError):
    """A computation produced inf or nan."""
