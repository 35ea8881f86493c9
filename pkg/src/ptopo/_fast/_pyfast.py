"""Pure-Python bitmask kernels.

Conventions shared with the compiled twin (``_cfast``):

* a point set on an ``n``-point carrier is an int mask, bit ``i`` = point ``i``;
* a convergence *table* for a point ``x`` is an int with bit ``s`` set iff the
  principal filter generated by the subset ``s`` converges to ``x`` (bit 0,
  the empty generator, is never set);
* ``unions[x]`` is the union of all convergent generators at ``x``, i.e. the
  generator of the neighborhood filter of ``x``;
* ``kind`` is ``NBHD`` (0) or ``CLOSURE`` (1).
"""

from __future__ import annotations

from itertools import product

from ..errors import StabilizationError

NBHD = 0
CLOSURE = 1
AXIOM_F = 0
AXIOM_R = 1


def hull(unions, mask):
    """Union of ``unions[y]`` over ``y`` in ``mask``."""
    out = 0
    y = 0
    while mask:
        if mask & 1:
            out |= unions[y]
        mask >>= 1
        y += 1
    return out


def closure_mask(unions, mask):
    out = 0
    for x, u in enumerate(unions):
        if u & mask:
            out |= 1 << x
    return out


def interior_mask(unions, mask):
    out = 0
    for x, u in enumerate(unions):
        if not u & ~mask:
            out |= 1 << x
    return out


def step(kind, unions, mask):
    if kind == NBHD:
        return hull(unions, mask)
    return closure_mask(unions, mask)


def iterate_mask(kind, unions, mask, steps):
    """Apply the operator ``steps`` times; ``steps < 0`` means to the fixed point.

    Generators only grow, so the fixed point is reached within ``len(unions)``
    steps; anything else raises :class:`StabilizationError`.
    """
    if steps >= 0:
        for _ in range(steps):
            mask = step(kind, unions, mask)
        return mask
    for _ in range(len(unions) + 1):
        nxt = step(kind, unions, mask)
        if nxt == mask:
            return mask
        mask = nxt
    raise StabilizationError("operator iteration did not stabilize within |X| steps")


def chain(kind, unions, mask):
    """All generators of the iterates ``op^0 .. op^k`` up to the fixed point."""
    out = [mask]
    for _ in range(len(unions) + 1):
        nxt = step(kind, unions, out[-1])
        if nxt == out[-1]:
            return out
        out.append(nxt)
    raise StabilizationError("operator iteration did not stabilize within |X| steps")


def downset_table(maxes, n):
    table = 0
    for s in range(1, 1 << n):
        for m in maxes:
            if not s & ~m:
                table |= 1 << s
                break
    return table


def maximal_sets(table, n):
    out = []
    full = (1 << n) - 1
    for s in range(1, 1 << n):
        if not (table >> s) & 1:
            continue
        rest = full & ~s
        maximal = True
        y = 0
        while rest:
            if rest & 1 and (table >> (s | (1 << y))) & 1:
                maximal = False
                break
            rest >>= 1
            y += 1
        if maximal:
            out.append(s)
    return tuple(out)


def members(table):
    """Generators recorded in a table, ascending."""
    out = []
    s = 0
    while table:
        if table & 1:
            out.append(s)
        table >>= 1
        s += 1
    return out


def is_p_topological(q_tables, q_maxes, p_unions, n):
    for x in range(n):
        t = q_tables[x]
        for m in q_maxes[x]:
            if not (t >> hull(p_unions, m)) & 1:
                return False
    return True


def is_p_regular(q_tables, q_maxes, p_unions, n):
    for x in range(n):
        t = q_tables[x]
        for m in q_maxes[x]:
            if not (t >> closure_mask(p_unions, m)) & 1:
                return False
    return True


def interior_witness(q_tables, p_unions, n):
    """For every F -> x, some G -> x has ``I_p(gen G)`` nonempty and containing gen F."""
    for x in range(n):
        conv = members(q_tables[x])
        interiors = [i for i in (interior_mask(p_unions, g) for g in conv) if i]
        for b in conv:
            if not any(not b & ~i for i in interiors):
                return False
    return True


def lower_tables(kind, q_maxes, p_unions, n):
    out = []
    for x in range(n):
        gens = []
        for m in q_maxes[x]:
            gens.extend(chain(kind, p_unions, m))
        out.append(downset_table(gens, n))
    return tuple(out)


def upper_exists(kind, q_tables, p_unions, n):
    for x in range(n):
        for g in chain(kind, p_unions, 1 << x):
            if not (q_tables[x] >> g) & 1:
                return False
    return True


def upper_tables(kind, q_tables, p_unions, n):
    if not upper_exists(kind, q_tables, p_unions, n):
        return None
    out = []
    for x in range(n):
        t = q_tables[x]
        bit = 1 << x
        row = 0
        for s in range(1, 1 << n):
            if all((t >> g) & 1 for g in chain(kind, p_unions, s | bit)):
                row |= 1 << s
        out.append(row)
    return tuple(out)


def diagonal_cost(p_tables, n, max_j):
    """Number of (psi, sigma, F, x) tuples the diagonal search would visit."""
    sizes = [bin(t).count("1") for t in p_tables]
    per_point = sum(sizes)
    total = 0
    for k in range(1, max_j + 1):
        # sum over psi of prod |options| equals (sum of sizes) ** k
        total += per_point**k * ((1 << k) - 1) * n
    return total


def diagonal_search(kind, q_tables, p_tables, n, max_j):
    """Exhaustive search for a violation of the F (kind 0) or R (kind 1) axiom.

    Index sets are ``J = {0..k-1}`` for ``k = 1..max_j``. Returns the first
    violation as ``(k, psi, sigma, E, x)`` -- ``psi`` and ``sigma`` tuples over
    ``J``, ``E`` the generator mask of the filter on ``J`` -- or ``None``.
    """
    options = [members(t) for t in p_tables]
    for k in range(1, max_j + 1):
        subsets = 1 << k
        for psi in product(range(n), repeat=k):
            for sigma in product(*(options[y] for y in psi)):
                img = [0] * subsets
                kap = [0] * subsets
                for e in range(1, subsets):
                    low = e & -e
                    y = low.bit_length() - 1
                    rest = e ^ low
                    img[e] = img[rest] | (1 << psi[y])
                    kap[e] = kap[rest] | sigma[y]
                    a = img[e]
                    b = kap[e]
                    for x in range(n):
                        t = q_tables[x]
                        ca = (t >> a) & 1
                        cb = (t >> b) & 1
                        if kind == AXIOM_F:
                            if ca and not cb:
                                return (k, psi, sigma, e, x)
                        elif cb and not ca:
                            return (k, psi, sigma, e, x)
    return None
