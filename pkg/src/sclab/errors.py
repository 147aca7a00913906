"""Exception hierarchy shared by the library and the CLI."""


class SclabError(Exception):
    pass


class PreconditionError(SclabError, ValueError):
    """An argument violates an operation's precondition."""


class AlphabetError(PreconditionError):
    """A word contains a letter outside the automaton's alphabet."""


class FormatError(SclabError, ValueError):
    """Malformed interchange input (JSON automata, dialect strings)."""


class BudgetExceeded(SclabError, RuntimeError):
    """A state/element budget was exhausted before the construction finished."""

    def __init__(self, what, budget, count=None):
        self.what = what
        self.budget = budget
        self.count = count
        msg = f"{what} budget of {budget} exceeded"
        if count is not None:
            msg += f" ({count} produced so far)"
        super().__init__(msg)


class InvariantViolation(SclabError, AssertionError):
    """A construction produced a shape its theory rules out."""
