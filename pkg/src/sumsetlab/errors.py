"""Exception types shared across the package.

Three failure modes are kept distinct because callers react to them
differently: bad input parameters (reject up front), a broken internal
guarantee (a bug, or a disproved claim), and a refused oversized search.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Input parameters violate a required hypothesis.

    The message names the violated inequality, e.g. ``h <= r*k``.
    """


class InvariantViolationError(RuntimeError):
    """An internal guarantee that should always hold was observed to fail.

    Raised by the greedy decomposition if one of its per-step conditions
    is false.  Reaching this is a bug (or a counterexample); it is never
    expected in normal operation.
    """


class ResourceCapError(RuntimeError):
    """A scan was refused because its candidate count exceeds the cap."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            f"enumeration of {count} candidates exceeds the cap of {cap}; "
            f"raise the cap to force the scan"
        )
