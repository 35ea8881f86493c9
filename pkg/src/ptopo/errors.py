"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class PtopoError(Exception):
    """Base class for every error raised by this package."""


class CarrierMismatch(PtopoError, ValueError):
    pass


class UnknownPoint(PtopoError, KeyError):
    def __str__(self) -> str:
        return f"unknown point {self.args[0]!r}"


class InvalidArgument(PtopoError, ValueError):
    pass


class AxiomViolation(PtopoError, ValueError):
    """A candidate structure fails one or more convergence axioms.

    ``failures`` is a list of ``(axiom, point)`` pairs, with ``axiom`` one of
    ``"C1"``, ``"C2-antichain"`` or ``"C3"``.
    """

    def __init__(self, failures: list[tuple[str, str]]):
        self.failures = list(failures)
        detail = "; ".join(f"{axiom} violated at point {point!r}" for axiom, point in self.failures)
        super().__init__(detail)


class MalformedDocument(PtopoError, ValueError):
    pass


class BudgetExceeded(PtopoError, RuntimeError):
    pass


class StabilizationError(PtopoError, RuntimeError):
    """An operator iteration failed to reach its fixed point within |X| steps."""


class NoExtremumFinding(PtopoError, RuntimeError):
    """A brute-force candidate set has no greatest (or least) element.

    Carries the maximal candidates so the caller can report them.
    """

    def __init__(self, message: str, candidates: list = ()):  # type: ignore[assignment]
        super().__init__(message)
        self.candidates = list(candidates)
