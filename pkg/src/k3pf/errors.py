"""Exception hierarchy.

Every domain error carries a short machine-readable ``kind`` used by the CLI
to build its ``{"error": kind, "detail": ...}`` payloads.
"""


class K3PFError(Exception):
    kind = "Error"

    def __init__(self, detail=""):
        self.detail = str(detail)
        super().__init__(self.detail or self.kind)


class DivisionByZero(K3PFError):
    kind = "DivisionByZero"


class ShapeError(K3PFError):
    kind = "ShapeError"


class ParseError(K3PFError):
    kind = "ParseError"


class NotInterior(K3PFError):
    kind = "NotInterior"


class NotReflexive(K3PFError):
    kind = "NotReflexive"


class NotInvariant(K3PFError):
    kind = "NotInvariant"


class NotARaySymmetry(K3PFError):
    kind = "NotARaySymmetry"


class HypothesisViolated(K3PFError):
    kind = "HypothesisViolated"


class NoSuchDegree(K3PFError):
    kind = "NoSuchDegree"


class Degenerate(K3PFError):
    kind = "Degenerate"


class ReductionStuck(K3PFError):
    kind = "ReductionStuck"


class OrderExceeded(K3PFError):
    kind = "OrderExceeded"


class WrongOrder(K3PFError):
    kind = "WrongOrder"


class DegenerateLeading(K3PFError):
    kind = "DegenerateLeading"


class SingularPoint(K3PFError):
    kind = "SingularPoint"


class TruncationTooShort(K3PFError):
    kind = "TruncationTooShort"
