#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Run settings shared between the command line and the library layers."""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
import os


RUN_ENV_BUDGET = "HERMPAIR_BUDGET"
RUN_ENV_WORKERS = "HERMPAIR_WORKERS"
DEFAULT_BUDGET = 2**26
DEFAULT_WORKERS = 1


@dataclass(frozen=True)
class RunContext:
    """Explicit settings for an active `hermpair` operation.

    `budget` caps the number of message vectors an exhaustive enumeration may
    visit, `workers` sets the thread count for distance enumeration and `seed`
    is the default seed for dealing shares.
    """

    budget: int | None = None
    workers: int | None = None
    seed: int | None = None


_CURRENT_RUN_CONTEXT: ContextVar[RunContext | None] = ContextVar(
    "hermpair_current_run_context", default=None
)


def current_run_context() -> RunContext | None:
    """Return the active run context, if one has been set."""

    return _CURRENT_RUN_CONTEXT.get()


@contextmanager
def run_context(
    *,
    budget: int | None = None,
    workers: int | None = None,
    seed: int | None = None,
):
    """Temporarily set run settings, inheriting unset values from the parent."""

    parent = current_run_context()
    context = RunContext(
        budget=budget if budget is not None else _parent_value(parent, "budget"),
        workers=workers if workers is not None else _parent_value(parent, "workers"),
        seed=seed if seed is not None else _parent_value(parent, "seed"),
    )
    token = _CURRENT_RUN_CONTEXT.set(context)
    try:
        yield context
    finally:
        _CURRENT_RUN_CONTEXT.reset(token)


def get_budget(budget: int | None = None) -> int:
    """Resolve the enumeration budget: argument, context, environment, default."""

    if budget is not None:
        return _check_positive(budget, "budget")
    context = current_run_context()
    if context is not None and context.budget is not None:
        return _check_positive(context.budget, "budget")
    value = _parse_optional_int(os.environ.get(RUN_ENV_BUDGET), RUN_ENV_BUDGET)
    return _check_positive(value, RUN_ENV_BUDGET) if value is not None else DEFAULT_BUDGET


def get_workers(workers: int | None = None) -> int:
    """Resolve the worker count: argument, context, environment, default."""

    if workers is not None:
        return _check_positive(workers, "workers")
    context = current_run_context()
    if context is not None and context.workers is not None:
        return _check_positive(context.workers, "workers")
    value = _parse_optional_int(os.environ.get(RUN_ENV_WORKERS), RUN_ENV_WORKERS)
    return _check_positive(value, RUN_ENV_WORKERS) if value is not None else DEFAULT_WORKERS


def get_seed(seed: int | None = None) -> int | None:
    if seed is not None:
        return seed
    context = current_run_context()
    return None if context is None else context.seed


def _parent_value(parent: RunContext | None, field: str):
    if parent is None:
        return None
    return getattr(parent, field)


def _check_positive(value: int, name: str) -> int:
    value = int(value)
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")
    return value


def _parse_optional_int(value: str | None, name: str) -> int | None:
    if value is None or value.strip() == "":
        return None
    try:
        return int(value)
    except ValueError as exc:
        raise ValueError(f'{name}="{value}" is not an integer') from exc
