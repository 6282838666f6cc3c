"""Opt-in dual computation of closed forms against their oracles.

Checked mode is scoped to the current context (thread / task), so enabling it
in one test never leaks into another thread.
"""
from contextlib import contextmanager
from contextvars import ContextVar

from .errors import OracleMismatch

ORACLE_TOL = 1e-12

_enabled: ContextVar[bool] = ContextVar("logent_oracle_checks", default=False)


def checks_enabled() -> bool:
    return _enabled.get()


def set_oracle_checks(flag: bool) -> None:
    _enabled.set(bool(flag))


@contextmanager
def oracle_checks(flag: bool = True):
    """Temporarily enable (or disable) oracle cross-checks."""
    token = _enabled.set(bool(flag))
    try:
        yield
    finally:
        _enabled.reset(token)


def agree(name, closed, oracle, tol=ORACLE_TOL):
    if not abs(closed - oracle) <= tol:
        raise OracleMismatch(f"{name}: closed form {closed!r} != oracle {oracle!r}")
