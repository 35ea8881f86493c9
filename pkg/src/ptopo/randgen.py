"""Seeded random instances.

Structures: at each point ``x`` draw ``k`` in 1..3 random subsets containing
``x`` (under C3; otherwise only the first is forced to contain ``x``) and keep
the maximal ones. Streams are reproducible per seed within this package.
"""

from __future__ import annotations

import random

from . import config
from .constructions import all_topologies
from .convergence import ConvergenceStructure
from .kernel import Carrier, SpaceMap


def random_structure(rng: random.Random, n: int, carrier: Carrier | None = None) -> ConvergenceStructure:
    carrier = carrier or Carrier.of_size(n)
    c3 = config.get().c3
    full = (1 << n) - 1
    antichains = []
    for x in range(n):
        bit = 1 << x
        picks = []
        for i in range(rng.randint(1, 3)):
            s = rng.randint(0, full)
            if c3 or i == 0:
                s |= bit
            elif not s:
                s = 1 << rng.randrange(n)
            picks.append(s)
        picks = set(picks)
        antichains.append(sorted(m for m in picks if not any(m != o and not m & ~o for o in picks)))
    return ConvergenceStructure.from_masks(carrier, antichains)


def random_pair(rng: random.Random, n: int) -> tuple[ConvergenceStructure, ConvergenceStructure]:
    return random_structure(rng, n), random_structure(rng, n)


def random_topology(rng: random.Random, n: int, carrier: Carrier | None = None) -> ConvergenceStructure:
    t = rng.choice(all_topologies(n))
    if carrier is not None and carrier != t.carrier:
        return ConvergenceStructure._trusted(carrier, t.tables)
    return t


def random_map(rng: random.Random, domain: Carrier, codomain: Carrier, surjective: bool = False) -> SpaceMap:
    if surjective and domain.n < codomain.n:
        raise ValueError("no surjection onto a larger carrier")
    while True:
        f = SpaceMap(domain, codomain, tuple(rng.randrange(codomain.n) for _ in range(domain.n)))
        if not surjective or f.is_surjective:
            return f
