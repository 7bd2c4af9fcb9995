class FPlusLdaError(Exception):
    """Base class of every error raised by fplus_lda."""


class InvalidDistributionError(FPlusLdaError, ValueError):
    """Weights are negative or carry no mass."""


class ContractViolationError(FPlusLdaError, ValueError):
    """A caller broke an operation's precondition."""


class ConsistencyError(FPlusLdaError, RuntimeError):
    """Sufficient statistics no longer agree with the assignments."""


class ConfigError(FPlusLdaError, ValueError):
    pass


class CorpusParseError(FPlusLdaError, ValueError):
    def __init__(self, line_number, message):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class CorpusValidationError(FPlusLdaError, ValueError):
    pass


class CheckpointError(FPlusLdaError, IOError):
    pass


class TransportClosedError(FPlusLdaError, RuntimeError):
    pass
