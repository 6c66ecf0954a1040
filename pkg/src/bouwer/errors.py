"""Exception hierarchy shared by every module of the package."""


class BouwerError(Exception):
    """Base class for all package errors."""


class InvalidParams(BouwerError, ValueError):
    """The triple (k, m, n) does not define a Bouwer graph."""


class TooSmall(InvalidParams):
    pass


class NotUnit(InvalidParams):
    pass


class IntegrityViolation(BouwerError):
    """A constructed graph failed its symmetry/regularity/simplicity checks."""


class WrongCase(BouwerError, ValueError):
    """An explicit map was requested for parameters it is not defined on."""


class BudgetExhausted(BouwerError):
    """The automorphism search hit its node budget before deciding."""

    def __init__(self, nodes_explored: int):
        super().__init__(f"oracle budget exhausted after {nodes_explored} nodes")
        self.nodes_explored = nodes_explored


class Unclassifiable(BouwerError):
    """No template matches the given arc or cycle."""


class Undecided(BouwerError):
    """Every classification stage was inconclusive."""
