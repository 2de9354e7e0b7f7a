"""Rediscover polynomial-coefficient recurrences from raw terms.

The linear system sum_j sum_e x_{j,e} * n^e * a(n-j) = 0 is assembled over
every usable sample index and solved for its exact nullspace; no floating
point anywhere, so a returned operator either fits the data exactly or does
not exist. A holdout window excluded from the system guards against
underdetermined fits.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact import Polynomial
from .linalg import nullspace
from .operators import ShiftOperator
from .sequences import BFileBackedSequence

#: Extra equations demanded beyond the unknown count before a fit is trusted.
MARGIN = 10


class InsufficientTermsError(ValueError):
    """Too few terms for the requested (order, degree) search."""


class GuessNotFoundError(RuntimeError):
    """No holdout-verified operator exists within the search caps."""


def required_terms(order: int, degree: int, holdout: int = 10) -> int:
    """Minimum term count for a trustworthy (order, degree) guess."""
    return (order + 1) * (degree + 1) + order + MARGIN + holdout


@dataclass(frozen=True)
class GuessProblem:
    """Raw terms plus the shape of the recurrence to look for."""

    terms: tuple[int, ...]
    order: int
    degree: int
    offset: int = 0
    holdout: int = 10

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if self.order < 1 or self.degree < 0 or self.holdout < 0:
            raise ValueError("order must be >= 1 and degree/holdout >= 0")
        need = required_terms(self.order, self.degree, self.holdout)
        if len(self.terms) < need:
            raise InsufficientTermsError(
                f"order={self.order}, degree={self.degree}, holdout={self.holdout} "
                f"needs at least {need} terms, got {len(self.terms)}"
            )


@dataclass(frozen=True)
class GuessCandidate:
    """One nullspace basis element, normalized into an operator if possible."""

    operator: ShiftOperator | None
    holdout_verified: bool
    degenerate: bool = False  # leading coefficient c_0 vanished


@dataclass(frozen=True)
class GuessResult:
    candidates: tuple[GuessCandidate, ...]
    dropped_rows: int = 0

    @property
    def verified(self) -> tuple[ShiftOperator, ...]:
        return tuple(
            c.operator
            for c in self.candidates
            if c.holdout_verified and c.operator is not None
        )


def guess_recurrence(problem: GuessProblem) -> GuessResult:
    """Exact nullspace guess for the given problem shape."""
    r, d, h = problem.order, problem.degree, problem.holdout
    terms = problem.terms
    lo = problem.offset
    hi = lo + len(terms) - 1

    sample_hi = hi - h
    rows = []
    dropped = 0
    for i in range(lo + r, sample_hi + 1):
        row = []
        for j in range(r + 1):
            a = terms[i - j - lo]
            for e in range(d + 1):
                row.append(a * i**e)
        if any(row):
            rows.append(row)
        else:
            dropped += 1

    basis = nullspace(rows, ncols=(r + 1) * (d + 1))
    seq = BFileBackedSequence("guess-input", lo, list(terms))
    candidates = []
    for vec in basis:
        polys = [Polynomial(vec[j * (d + 1) : (j + 1) * (d + 1)]) for j in range(r + 1)]
        while polys and polys[-1].is_zero:
            polys.pop()
        if not polys or polys[0].is_zero:
            candidates.append(
                GuessCandidate(operator=None, holdout_verified=False, degenerate=True)
            )
            continue
        op = ShiftOperator(polys)
        ok = all(
            op.apply(seq, i) == 0
            for i in range(max(sample_hi + 1, lo + op.order), hi + 1)
        )
        candidates.append(GuessCandidate(operator=op, holdout_verified=ok))
    return GuessResult(candidates=tuple(candidates), dropped_rows=dropped)


def minimal_guess(
    terms: Sequence[int],
    max_order: int,
    max_degree: int,
    offset: int = 0,
    holdout: int = 10,
) -> ShiftOperator:
    """Smallest holdout-verified recurrence within the caps.

    Walks (order, degree) ascending, order first; within one nullspace, ties
    break toward the lexicographically smallest normalized coefficients.
    """
    terms = tuple(terms)
    skipped = []
    for r in range(1, max_order + 1):
        for d in range(max_degree + 1):
            try:
                problem = GuessProblem(
                    terms=terms, order=r, degree=d, offset=offset, holdout=holdout
                )
            except InsufficientTermsError:
                skipped.append((r, d))
                continue
            result = guess_recurrence(problem)
            verified = result.verified
            if verified:
                return min(verified, key=lambda op: tuple(p.coeffs for p in op.coeffs))
    hint = f" ({len(skipped)} shapes skipped for lack of terms)" if skipped else ""
    raise GuessNotFoundError(
        f"no verified recurrence within order<={max_order}, degree<={max_degree}{hint}"
    )
