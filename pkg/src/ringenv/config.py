"""Size caps for table construction and exhaustive enumeration.

Caps are held in a context variable so concurrent callers can raise them
locally without affecting each other::

    with limits(table_order=81):
        R = make_zmod(81)
"""

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    table_order: int = 64     # largest FiniteRing that may be tabulated
    ideal_order: int = 64     # largest ring whose ideal lattice is walked
    hom_order: int = 64       # largest domain/codomain for hom enumeration
    max_variables: int = 8
    spair_budget: int = 100_000
    presented_dimension: int = 512  # standard monomials for linear-algebra routes


_current = ContextVar("ringenv_limits", default=Limits())


def get_limits():
    return _current.get()


@contextmanager
def limits(**overrides):
    token = _current.set(replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
