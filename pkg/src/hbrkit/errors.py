"""Exception hierarchy; the CLI maps these to stable exit codes."""


class HbrkitError(Exception):
    """Base class for all package errors."""


class SchemaError(HbrkitError):
    """Malformed schema/config or missing columns."""


class DataError(HbrkitError):
    """Degenerate or unusable data (empty, constant columns, tiny batches)."""


class UnknownBatchError(DataError):
    """A prediction-time batch label was never seen at fit time."""


class SamplerError(HbrkitError):
    """The sampler could not produce draws (bad initialization, all-divergent warmup)."""


class DiagnosticsError(HbrkitError):
    """Convergence diagnostics failed; the offending report/model is attached."""

    def __init__(self, message, model=None, report=None):
        super().__init__(message)
        self.model = model
        self.report = report


class MismatchError(HbrkitError):
    """Structural mismatch between a model/pack and the data or spec it is applied to."""


class NonFiniteDensityError(HbrkitError):
    """Log density evaluated to a non-finite value; names the offending block."""

    def __init__(self, block, value):
        super().__init__(f"non-finite log density contribution in block {block!r} ({value})")
        self.block = block
        self.value = value
