"""Exception types shared across simembed modules."""


class SimembedError(Exception):
    """Base class for all simembed errors."""


class ShapeError(SimembedError, ValueError):
    """Tensor shapes are incompatible with the requested operation."""


class NumericError(SimembedError, ArithmeticError):
    """A computation produced a non-finite value."""


class ConfigError(SimembedError, ValueError):
    """Invalid configuration, argument, or precondition violation."""


class SingleClassBatchError(ConfigError):
    """A batch or dataset spans only one class, so negative pairs are impossible."""


class TrainingDivergedError(SimembedError, RuntimeError):
    """Training hit a non-finite loss; message names the epoch and batch."""


class CheckpointError(SimembedError, ValueError):
    """Base class for checkpoint / container file format errors."""


class CheckpointMagicError(CheckpointError):
    """File does not start with the expected magic bytes."""


class CheckpointVersionError(CheckpointError):
    """File carries an unsupported format version."""


class CheckpointTruncatedError(CheckpointError):
    """File ended mid-record."""


class CifarFormatError(SimembedError, ValueError):
    """Base class for CIFAR-10 binary format violations."""


class CifarSizeError(CifarFormatError):
    """File size is not a whole number of records."""


class CifarLabelError(CifarFormatError):
    """A record's label byte is outside [0, 9]."""
