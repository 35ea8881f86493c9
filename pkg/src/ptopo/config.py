"""Global conventions and budgets.

The only semantic switch is ``c3``: whether convergence structures must satisfy
``F -> x  implies  F meet x-dot -> x``. Everything else is a resource guard.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Settings:
    c3: bool = True
    max_structures_n: int = 4
    max_topologies_n: int = 5
    # upper bound on (psi, sigma, F, x) tuples examined by the diagonal-axiom search
    diagonal_budget: int = 50_000_000
    # upper bound on objects a single enumeration may emit
    enumeration_budget: int = 2_000_000


_current = Settings()


def get() -> Settings:
    return _current


def configure(**changes) -> Settings:
    """Replace settings globally; returns the previous value."""
    global _current
    previous = _current
    known = {f.name for f in fields(Settings)}
    unknown = sorted(k for k in changes if k not in known)
    if unknown:
        raise TypeError(f"unknown settings: {unknown}")
    _current = replace(_current, **changes)
    return previous


@contextlib.contextmanager
def using(**changes):
    """Temporarily override settings, e.g. ``with using(c3=False): ...``."""
    global _current
    previous = configure(**changes)
    try:
        yield _current
    finally:
        _current = previous
