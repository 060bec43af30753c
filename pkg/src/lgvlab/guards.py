"""Enumeration guards.

Every exhaustive enumeration in this package is bounded by a guard limit:
before materializing a combinatorial family we estimate its size by a cheap
closed-form count (a determinant or permanent of binomial coefficients) and
refuse to proceed if the estimate exceeds the limit.  This turns a runaway
computation into an immediate, diagnosable error.

The default limit is 10**7 objects.  It can be overridden per call (the
``guard_limit`` keyword accepted throughout), or globally through the
``LGVLAB_GUARD_LIMIT`` environment variable.
"""

import os

DEFAULT_GUARD_LIMIT = 10**7

ENV_VAR = "LGVLAB_GUARD_LIMIT"


class GuardExceeded(RuntimeError):
    """An enumeration was refused because its projected size exceeds the guard."""

    def __init__(self, what: str, projected: int, limit: int):
        super().__init__(
            f"{what}: projected size {projected} exceeds guard limit {limit}"
        )
        self.what = what
        self.projected = projected
        self.limit = limit


def resolve_guard_limit(guard_limit: int | None = None) -> int:
    """Return the effective guard limit.

    Explicit argument wins, then the LGVLAB_GUARD_LIMIT environment variable,
    then the built-in default.
    """
    if guard_limit is not None:
        return guard_limit
    env = os.environ.get(ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{ENV_VAR} must be an integer, got {env!r}") from exc
    return DEFAULT_GUARD_LIMIT


def check_guard(what: str, projected: int, guard_limit: int | None = None) -> None:
    """Raise GuardExceeded if ``projected`` exceeds the effective limit."""
    limit = resolve_guard_limit(guard_limit)
    if projected > limit:
        raise GuardExceeded(what, projected, limit)
