"""Shared error types.

Guards are explicit limits, never silent truncation: exceeding one raises
GuardExceeded so results are all-or-nothing.  InvariantViolation marks
conditions that the underlying theory rules out; seeing one means a bug or a
broken precondition, not an unlucky input.
"""


class GuardExceeded(RuntimeError):
    """A configured work/time limit would be exceeded; no partial results."""


class InvariantViolation(RuntimeError):
    """A mathematically impossible condition was observed."""
