"""Exception types.

Everything derives from ``ValueError``.  Subclasses of
:class:`MathematicalViolation` mean the inputs were well-formed but a
mathematical precondition failed; the CLI maps those to exit code 1 and every
other error to exit code 2.
"""


class LipApproxError(ValueError):
    pass


class MathematicalViolation(LipApproxError):
    pass


# metric spaces
class NonSquareMatrix(LipApproxError):
    pass


class NegativeDistance(LipApproxError):
    pass


class AsymmetricMatrix(LipApproxError):
    pass


class NonzeroDiagonal(LipApproxError):
    pass


class NonFiniteDistance(LipApproxError):
    pass


class NotAMetric(MathematicalViolation):
    pass


class DimensionMismatch(LipApproxError):
    pass


class DuplicatePoint(LipApproxError):
    pass


class DisconnectedGraph(LipApproxError):
    pass


class NonpositiveWeight(LipApproxError):
    pass


class PointOnOrOutsideBoundary(LipApproxError):
    pass


class InvalidP(LipApproxError):
    pass


class EmptySpace(LipApproxError):
    pass


# nets
class SeedsTooClose(LipApproxError):
    def __init__(self, pair, distance, t):
        self.pair = pair
        self.distance = distance
        self.t = t
        super().__init__(f"seeds {pair[0]} and {pair[1]} are {distance!r} apart, below t={t!r}")


class IndexOutOfRange(LipApproxError):
    pass


# extension
class CTooSmall(MathematicalViolation):
    def __init__(self, C, required):
        self.C = C
        self.required = required
        super().__init__(f"C={C!r} is below the Lipschitz constant {required!r} of the restriction")


class EmptySubset(LipApproxError):
    pass


# approximation
class NonpositiveInput(LipApproxError):
    pass


class StarViolated(MathematicalViolation):
    def __init__(self, epsilon, C, witness, excess):
        self.epsilon = epsilon
        self.C = C
        self.witness = witness
        self.excess = excess
        super().__init__(
            f"|f(x)-f(y)| <= eps + C*d(x,y) fails for eps={epsilon!r}, C={C!r} "
            f"at pair {witness} (excess {excess!r})"
        )


class FileFormatError(LipApproxError):
    pass
