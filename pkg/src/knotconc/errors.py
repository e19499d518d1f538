"""Exception types shared across the package."""


class KnotconcError(ValueError):
    """Base class for all mathematical-precondition failures."""


class NonHermitianInput(KnotconcError):
    pass


class InvalidSeifertMatrix(KnotconcError):
    pass


class IrrationalJumpAngle(KnotconcError):
    """A unit-circle root of the Alexander polynomial is not a root of unity.

    ``sampled`` holds the step function in sampled form (jump locations
    known only up to isolating intervals) when it could be built.
    """

    def __init__(self, message, sampled=None):
        super().__init__(message)
        self.sampled = sampled


class ExceptionalPoint(KnotconcError):
    pass


class UnsupportedNode(KnotconcError):
    pass


class ArfNonzero(KnotconcError):
    pass


class SingularPresentation(KnotconcError):
    pass


class NonCyclicAbelianization(KnotconcError):
    pass


class UnsupportedDepth(KnotconcError):
    pass


class Infeasible(KnotconcError):
    def __init__(self, message, violated=()):
        super().__init__(message)
        self.violated = tuple(violated)


class StageInvalid(KnotconcError):
    pass


class MarginViolated(KnotconcError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
