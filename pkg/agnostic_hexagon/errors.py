class AgnosticError(Exception):
    pass


class GridError(AgnosticError, ValueError):
    pass


class GridSizeError(GridError):
    pass


class EmptyFamilyError(AgnosticError, ValueError):
    pass


class EmptyRegionError(AgnosticError, ValueError):
    pass


class EmptyHypothesisError(AgnosticError, ValueError):
    pass


class ZeroEvidenceError(AgnosticError, ValueError):
    pass


class LossSpecError(AgnosticError, ValueError):
    pass


class CutoffError(AgnosticError, ValueError):
    pass


class WitnessError(AgnosticError, ValueError):
    pass


class PreconditionError(AgnosticError, ValueError):
    pass


class InconsistentTestError(AgnosticError, ValueError):
    pass


class HexagonStateError(AgnosticError, ValueError):
    pass


class ChainViolationError(HexagonStateError):
    def __init__(self, implication: str, message: str = ""):
        self.implication = implication
        super().__init__(message or f"Implication {implication} is violated.")


class ObservationError(AgnosticError, ValueError):
    pass


class ProbabilityError(PreconditionError):
    pass
