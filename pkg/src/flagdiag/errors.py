"""Exception hierarchy shared by all flagdiag modules."""


class FlagdiagError(Exception):
    """Base class for all errors raised by this package."""


# --- tensor container I/O ---

class ManifestError(FlagdiagError):
    """Container manifest is missing, unparseable, or structurally invalid."""


class MissingBlob(FlagdiagError):
    """A blob file referenced by the manifest does not exist."""


class ShapeMismatch(FlagdiagError):
    """Declared tensor bytes exceed the blob file, or shapes are inconsistent."""


class DuplicateName(FlagdiagError):
    """Two tensors in one container share a name."""


class NonFinite(FlagdiagError):
    """A loaded tensor contains NaN or Inf and allow_nonfinite was not set."""


class ChecksumMismatch(FlagdiagError):
    """A blob's sha256 does not match the manifest entry."""


class IoFailure(FlagdiagError):
    """Filesystem write failed while saving a container."""


# --- subspace geometry ---

class DimensionMismatch(FlagdiagError):
    """Operands live in different ambient spaces or have incompatible shapes."""


class RankDeficient(FlagdiagError):
    """Matrix has lower numerical rank than requested and reduction was not allowed."""


class ZeroMatrix(FlagdiagError):
    """Cannot orthonormalize the zero matrix."""


class InvalidRanks(FlagdiagError):
    """Rank profile violates 0 < r_1 <= ... <= r_L <= d."""


# --- stratification / degeneration ---

class DegenerateInput(FlagdiagError):
    """Numerical intersection dimension is ambiguous at the given tolerance."""


class UnknownStatistic(FlagdiagError):
    """Invariance probe asked for a statistic it does not know."""


# --- ridge flow ---

class NonPositiveLambda(FlagdiagError):
    """Ridge penalty must be strictly positive."""


class StepTooLarge(FlagdiagError):
    """Explicit integrator diverged; reduce the step size."""


# --- activation metric ---

class EmptyBatch(FlagdiagError):
    """Gate sample batch has zero rows."""


class ZeroConformal(FlagdiagError):
    """Conformal scalar is zero; the relative gap is undefined."""


# --- attention heads ---

class UnknownLayout(FlagdiagError):
    """Tensor layout tag is not one of the supported query-weight layouts."""


class ShapeInconsistent(FlagdiagError):
    """Declared head count / head dim disagree with the tensor shape."""


class RankDeficientHead(FlagdiagError):
    """A head's query matrix has numerical rank below its declared head dim."""


class InvalidDims(FlagdiagError):
    """Subspace rank exceeds the ambient dimension."""


# --- experiments ---

class InvalidParams(FlagdiagError):
    """Experiment configuration is out of range."""


class Diverged(FlagdiagError):
    """Training loss became NaN."""
