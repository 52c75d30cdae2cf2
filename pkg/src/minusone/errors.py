"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` and the process exit
status the CLI maps it to (2 = bad input, 3 = mathematical breakdown).
"""


class MinusOneError(Exception):
    code = "error"
    exit_code = 3


class InvalidParams(MinusOneError, ValueError):
    code = "invalid-params"
    exit_code = 2


class ScalarParseError(InvalidParams):
    code = "scalar-parse"

    def __init__(self, text, position, reason="unexpected character"):
        self.text = text
        self.position = position
        super().__init__(f"cannot parse scalar {text!r}: {reason} at position {position}")


class ScalarDivisionByZero(MinusOneError, ZeroDivisionError):
    code = "division-by-zero"


class EigenvalueCollision(MinusOneError):
    code = "eigenvalue-collision"

    def __init__(self, j, k, value):
        self.pair = (j, k)
        self.value = value
        super().__init__(f"eigenvalue collision h[{j}] = h[{k}] = {value}")


class DenominatorZero(MinusOneError):
    code = "denominator-zero"

    def __init__(self, index, what="closed form"):
        self.index = index
        super().__init__(f"vanishing denominator in {what} at index {index}")


class FactorizationBreakdown(MinusOneError):
    code = "factorization-breakdown"

    def __init__(self, index, context=""):
        self.index = index
        msg = f"breakdown at k={index}: pivot z_{index} vanishes"
        if context:
            msg = f"{msg} ({context})"
        super().__init__(msg)


class DegreeOverflow(MinusOneError):
    code = "degree-overflow"


class InsufficientSamples(MinusOneError):
    code = "insufficient-samples"


class ResidualNonzero(MinusOneError):
    code = "residual-nonzero"

    def __init__(self, index):
        self.index = index
        super().__init__(f"family does not satisfy a three-term recurrence at n={index}")


class NodeCollision(MinusOneError):
    code = "node-collision"

    def __init__(self, j, k):
        self.pair = (j, k)
        super().__init__(f"repeated interpolation nodes x[{j}] = x[{k}]")
