"""Size caps for graphs and the internal generator.

Everything is tuned for desk-scale experiments: vertex sets are bitmasks,
the generator enumerates isomorphism classes exhaustively, and canonical
forms are found by pruned permutation search. The caps keep those paths
honest. SEP_MAX_N lifts them at your own risk (memory and time grow fast).
"""

import os

DEFAULT_MAX_VERTICES = 64
DEFAULT_GENERATOR_LIMIT = 7
DEFAULT_CANONICAL_LIMIT = 10

_ENV_VAR = "SEP_MAX_N"


def _env_override() -> int | None:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{_ENV_VAR} must be positive, got {value}")
    return value


def max_vertices() -> int:
    """Largest permitted vertex count for any Graph."""
    override = _env_override()
    if override is not None:
        return max(override, DEFAULT_MAX_VERTICES)
    return DEFAULT_MAX_VERTICES


def generator_limit() -> int:
    """Largest n served by the internal isomorph-free generator."""
    override = _env_override()
    if override is not None:
        return override
    return DEFAULT_GENERATOR_LIMIT


def canonical_limit() -> int:
    """Largest n accepted by the brute-force canonical form."""
    return max(DEFAULT_CANONICAL_LIMIT, generator_limit())
