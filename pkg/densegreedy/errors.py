# densegreedy/errors.py
from __future__ import annotations


class DenseGreedyError(Exception):
    """Base for every failure the library reports on purpose."""

    kind = "error"

    def to_dict(self) -> dict:
        return {"error": self.kind, "detail": str(self)}


class ArgumentError(DenseGreedyError, ValueError):
    kind = "argument"


class UndefinedDensityError(ArgumentError):
    kind = "undefined_density"


class InvalidPartitionError(ArgumentError):
    kind = "invalid_partition"


class NTooSmallError(ArgumentError):
    kind = "n_too_small"


class DegenerateThresholdError(ArgumentError):
    kind = "degenerate_threshold"


class ResourceError(DenseGreedyError):
    """A configured budget would be exceeded; the search is abandoned, never approximated."""

    kind = "resource"
