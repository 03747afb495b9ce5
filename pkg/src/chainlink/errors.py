class ChainlinkError(ValueError):
    """Bad input to a library operation."""


class PreconditionError(ChainlinkError):
    """An operation was called outside its stated domain.

    The message names the violated inequality.
    """


class CapExceeded(ChainlinkError):
    """Input is larger than a brute-force routine is allowed to handle."""


class UnboundedError(ChainlinkError):
    """A polytope has no explicit box bound on some coordinate."""


class ConsistencyError(RuntimeError):
    """Two independent computations that must agree did not."""
