"""Exception types shared across the package."""


class PlacerankError(Exception):
    """Base class for every domain error raised by this package."""


class ValidationError(PlacerankError):
    """A field-level rule was violated; carries the offending field name."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class InvalidDateOrder(PlacerankError):
    """Birth date is not strictly before the reference date."""


class NoMatchingRule(PlacerankError):
    """A raw value fell outside every rule of a criterion's conversion table.

    Signals an ineligible or misconfigured input; the caller decides
    between excluding the candidate and aborting.
    """

    def __init__(self, criterion_code: str, raw, candidate_id=None):
        self.criterion_code = criterion_code
        self.raw = raw
        self.candidate_id = candidate_id
        who = f" (candidate {candidate_id})" if candidate_id is not None else ""
        super().__init__(f"no rule of {criterion_code} matches {raw!r}{who}")


class EmptyBatch(PlacerankError):
    """No eligible candidate is left to rank."""


class CostZeroValue(PlacerankError):
    """A cost column contains a zero entry; min/x is undefined."""


class DimensionMismatch(PlacerankError):
    """Criteria list does not line up with the matrix columns."""


class DuplicateCandidate(PlacerankError):
    """Another record already holds the same normalized name + birth date."""


class NotFound(PlacerankError):
    """The referenced id does not exist."""


class NoResults(PlacerankError):
    """The batch has not been executed yet."""


class CriteriaConfigError(PlacerankError):
    """The criteria configuration is missing, empty, or malformed."""
