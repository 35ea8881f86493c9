"""Topological and regularity series.

Stage ``a`` is the lower modification of ``q`` relative to an auxiliary
structure ``p_a``: ``p_0`` is discrete, ``p_1 = q``, each later ``p_a`` is the
previous stage, and at a limit index ``p_a`` is the infimum of all earlier
stages. The length is the first index whose stage equals the next one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import lattice_ops
from .convergence import ConvergenceStructure
from .errors import InvalidArgument, StabilizationError
from .modifications import lower_modification

_KINDS = {"topological": "topological", "regularity": "regular"}

OMEGA = "omega"


@dataclass(frozen=True)
class Stage:
    index: int | str
    auxiliary: ConvergenceStructure
    value: ConvergenceStructure


@dataclass(frozen=True)
class SeriesResult:
    kind: str
    stages: tuple[Stage, ...]
    length: int | str

    @property
    def limit(self) -> ConvergenceStructure:
        return self.stages[-1].value

    def values(self) -> list[ConvergenceStructure]:
        return [s.value for s in self.stages]


def ordinal_series(kind: str, q: ConvergenceStructure, max_stages: int | None = None) -> SeriesResult:
    """Compute stages until the first repeat.

    The recorded stages run from index 0 through ``length + 1``; the last two
    are equal. ``max_stages`` bounds the finite part before the limit clause
    kicks in; a descending chain on a finite carrier repeats long before the
    default bound (the number of points' subsets times points plus two).
    """
    try:
        mod = _KINDS[kind]
    except KeyError:
        raise InvalidArgument(f"unknown series kind {kind!r}") from None
    if max_stages is None:
        max_stages = q.n * (1 << q.n) + 2
    delta = ConvergenceStructure.discrete(q.carrier)
    stages = [Stage(0, delta, lower_modification(mod, q, delta))]
    aux = q
    while len(stages) <= max_stages:
        index = len(stages)
        value = lower_modification(mod, q, aux)
        stages.append(Stage(index, aux, value))
        if value == stages[-2].value:
            return SeriesResult(kind, tuple(stages), index - 1)
        if not value <= stages[-2].value:
            raise StabilizationError(f"{kind} series is not descending at stage {index}")
        aux = value
    # limit stage: the auxiliary is the infimum of every earlier stage
    aux = lattice_ops("inf", [s.value for s in stages])
    value = lower_modification(mod, q, aux)
    stages.append(Stage(OMEGA, aux, value))
    if value != stages[-2].value:
        raise StabilizationError(f"{kind} series did not stabilize by the first limit stage")
    return SeriesResult(kind, tuple(stages), OMEGA)
