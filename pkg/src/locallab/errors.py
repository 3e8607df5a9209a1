"""Exception types shared across the package."""


class LocalLabError(Exception):
    """Base class for every error raised by this package."""


class ColoringError(LocalLabError, ValueError):
    """Invalid edge-coloring input."""


class SelfLoopError(ColoringError):
    """An assignment colors a vertex pair (v, v)."""


class VertexRangeError(ColoringError):
    """An assignment mentions a vertex outside 0..n-1."""


class DuplicatePairError(ColoringError):
    """The same unordered pair is assigned twice."""


class MissingPairError(ColoringError):
    """Some unordered pair of K_n received no color."""


class BudgetExceededError(LocalLabError):
    """An enumeration would exceed the configured ceiling."""


class PartitionError(LocalLabError, ValueError):
    """A vertex partition does not meet its structural contract."""


class EnergyGraphError(LocalLabError, ValueError):
    """An energy-graph operation was applied to an unsuitable graph."""


class SignConsistencyError(LocalLabError, ValueError):
    """An edge of an arithmetic energy graph fails its sign equations."""


class WitnessError(LocalLabError):
    """A witness construction could not be completed or re-verified."""


class PaddingError(WitnessError):
    """Not enough spare edges of the padding color.

    `deficit` records how many repetitions are still missing.
    """

    def __init__(self, deficit, color_label):
        self.deficit = deficit
        self.color_label = color_label
        super().__init__(
            f"padding needs {deficit} more unused edge(s) of color {color_label!r}"
        )
