"""Exception hierarchy shared across the toolkit."""


class MdmError(Exception):
    """Base class for all toolkit errors."""


class GraphError(MdmError):
    pass


class DuplicateNodeError(GraphError):
    pass


class DanglingEdgeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class UnknownNodeError(GraphError):
    pass


class SchemaMismatchError(GraphError):
    pass


class EmptyResultError(GraphError):
    pass


class ConfigError(MdmError):
    pass


class InfeasibleRatioError(ConfigError):
    pass


class InvalidThresholdsError(MdmError):
    pass


class UnclassedSensitiveAttributeError(MdmError):
    pass


class ShapeMismatchError(MdmError):
    pass


class NonFiniteActivationError(MdmError):
    pass


class TooFewEdgesError(MdmError):
    pass


class ExhaustedCandidatesError(MdmError):
    pass


class SingleClassError(MdmError):
    pass


class DivergenceError(MdmError):
    pass


class EmptyWatchlistError(MdmError):
    pass


class IncompleteRecordError(MdmError):
    pass


class ArtifactMissingError(MdmError):
    pass
