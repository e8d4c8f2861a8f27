"""Exception hierarchy shared by all qtcmodel modules."""


class QTCModelError(Exception):
    """Base class for every error raised by qtcmodel."""


class InvalidInputError(QTCModelError, ValueError):
    pass


class PoleEvaluationError(QTCModelError, ZeroDivisionError):
    pass


class SynthesisError(QTCModelError):
    """Network cannot be realised as a positive RC ladder."""


class ConditioningError(SynthesisError):
    """Continued-fraction expansion lost significance."""


class ModelRangeError(QTCModelError):
    """A temperature-dependent element left its physical range."""


class ConvergenceError(QTCModelError):
    pass


class DivergenceError(QTCModelError):
    pass


class AlignmentError(QTCModelError):
    """Requested harmonic does not fall on a DFT bin."""


class ConfigError(QTCModelError):
    pass
