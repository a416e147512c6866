"""Resource limits shared by the graph, oracle and orbit machinery."""

from __future__ import annotations

import os

ENV_VAR = "BRUIJN_MIS_BUDGET"

DEFAULT_NODE_BUDGET = 10**6
DEFAULT_ORACLE_BUDGET = 10**4


class BudgetExceeded(RuntimeError):
    """Raised when a request would materialize or search more than allowed."""


def _env_budget() -> int | None:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_VAR} must be positive, got {value}")
    return value


def node_budget(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = _env_budget()
    return DEFAULT_NODE_BUDGET if env is None else env


def oracle_budget(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = _env_budget()
    return DEFAULT_ORACLE_BUDGET if env is None else env
