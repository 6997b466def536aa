"""Exception hierarchy shared by every module of the package."""


class PlanarFlowError(ValueError):
    """Base class for all errors raised by planarflow."""


# embedding validation and graph structure
class MissingDart(PlanarFlowError):
    pass


class DuplicateDart(PlanarFlowError):
    pass


class EndpointOutOfRange(PlanarFlowError):
    pass


class DisconnectedGraph(PlanarFlowError):
    pass


class NotOuterplanar(PlanarFlowError):
    pass


class SelfLoopContraction(PlanarFlowError):
    pass


class EmptyTree(PlanarFlowError):
    pass


class NotFatTree(PlanarFlowError):
    pass


# flow data
class InvalidNetwork(PlanarFlowError):
    pass


class CapacityViolated(PlanarFlowError):
    pass


class NegativeResidualCycle(PlanarFlowError):
    def __init__(self, message, cycle=None):
        super().__init__(message)
        self.cycle = cycle


class ForcedArcDeviation(PlanarFlowError):
    pass


class NonZeroBalances(PlanarFlowError):
    pass


class TooLarge(PlanarFlowError):
    pass


# dynamic forests
class ForestError(PlanarFlowError):
    pass


class CycleCreation(ForestError):
    pass


class MissingArc(ForestError):
    pass


class DetachedVertex(ForestError):
    pass


class EmptyLeafSet(ForestError):
    pass


class ParseError(PlanarFlowError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
