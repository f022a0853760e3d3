from __future__ import annotations


class GrunskyError(Exception):
    """Base class for every error raised by grunskybounds."""


class UsageError(GrunskyError):
    pass


class SeriesError(GrunskyError, ValueError):
    pass


class ZeroConstantTerm(SeriesError):
    pass


class ConstantTermNotOne(SeriesError):
    pass


class NotNormalized(SeriesError):
    pass


class CapTooLarge(SeriesError):
    pass


class OrderTooSmall(SeriesError):
    pass


class MissingEntry(GrunskyError, LookupError):
    pass


class DomainError(GrunskyError, ValueError):
    pass


class BudgetExceeded(GrunskyError, RuntimeError):
    def __init__(self, message: str, boxes: int) -> None:
        super().__init__(message)
        self.boxes = boxes
