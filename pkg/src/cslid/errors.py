"""Exception types shared across the toolkit."""


class CslidError(Exception):
    """Base class for all toolkit errors."""


class EmptyVocabulary(CslidError):
    """No word survived the frequency threshold."""


class NoFeatures(CslidError):
    """An input produced an empty feature bag; callers choose the policy."""


class UnknownLabel(CslidError):
    """A gold label is not among the model's labels."""


class MultiLabelGold(CslidError):
    """Softmax cross-entropy training requires exactly one gold label."""


class NonFiniteLoss(CslidError):
    """Training hit a NaN/inf loss and aborted."""


class FormatError(CslidError):
    """A file is malformed. Carries the byte or line offset when known."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class EmptyDataset(CslidError):
    """A metric was requested over zero instances."""


class LengthMismatch(CslidError):
    """Gold and prediction streams have different lengths."""
