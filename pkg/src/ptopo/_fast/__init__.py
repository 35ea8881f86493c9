"""Bitmask kernels behind every operator in the package.

The compiled module ``_cfast`` is used when it was built and the carrier has at
most ``_cfast.MAX_POINTS`` points; otherwise calls fall through to the
pure-Python twin ``_pyfast``. Set ``PTOPO_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pyfast

NBHD = _pyfast.NBHD
CLOSURE = _pyfast.CLOSURE
AXIOM_F = _pyfast.AXIOM_F
AXIOM_R = _pyfast.AXIOM_R

_c = None
if not os.environ.get("PTOPO_PURE_PYTHON"):
    try:
        from . import _cfast as _c  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _c = None

BACKEND = "cython" if _c is not None else "python"
_CMAX = _c.MAX_POINTS if _c is not None else 0


def backend_for(n: int):
    """Module implementing the kernels for an ``n``-point carrier."""
    return _c if _c is not None and n <= _CMAX else _pyfast


def _by_unions(name):
    def call(unions, *args):
        return getattr(backend_for(len(unions)), name)(unions, *args)

    call.__name__ = name
    return call


hull = _by_unions("hull")
closure_mask = _by_unions("closure_mask")
interior_mask = _by_unions("interior_mask")


def iterate_mask(kind, unions, mask, steps):
    return backend_for(len(unions)).iterate_mask(kind, unions, mask, steps)


def chain(kind, unions, mask):
    return backend_for(len(unions)).chain(kind, unions, mask)


def downset_table(maxes, n):
    return backend_for(n).downset_table(maxes, n)


def maximal_sets(table, n):
    return backend_for(n).maximal_sets(table, n)


members = _pyfast.members


def is_p_topological(q_tables, q_maxes, p_unions, n):
    return backend_for(n).is_p_topological(q_tables, q_maxes, p_unions, n)


def is_p_regular(q_tables, q_maxes, p_unions, n):
    return backend_for(n).is_p_regular(q_tables, q_maxes, p_unions, n)


def interior_witness(q_tables, p_unions, n):
    return backend_for(n).interior_witness(q_tables, p_unions, n)


def lower_tables(kind, q_maxes, p_unions, n):
    return backend_for(n).lower_tables(kind, q_maxes, p_unions, n)


def upper_exists(kind, q_tables, p_unions, n):
    return backend_for(n).upper_exists(kind, q_tables, p_unions, n)


def upper_tables(kind, q_tables, p_unions, n):
    return backend_for(n).upper_tables(kind, q_tables, p_unions, n)


diagonal_cost = _pyfast.diagonal_cost


def diagonal_search(kind, q_tables, p_tables, n, max_j):
    return backend_for(n).diagonal_search(kind, q_tables, p_tables, n, max_j)
