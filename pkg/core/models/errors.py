class ScopeError(ValueError):
    """Parameters fall outside the hypotheses of the claim being checked."""


class PreconditionError(ValueError):
    """An oracle's input does not satisfy the oracle's own hypothesis."""


class SingularEvaluationError(ArithmeticError):
    pass


class SuiteCorruptionError(RuntimeError):
    """A proven conclusion or a dual-route identity failed.

    Never downgraded to an ordinary counterexample: it means a formula was
    transcribed wrong somewhere.
    """
