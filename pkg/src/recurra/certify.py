"""Symbolic certification that an operator annihilates a ratio-defined term.

A term t is described by p(n) * t(n) = q(n) * t(n - k) together with the
residue classes mod k on which t is nonzero. Applying an operator to t and
rewriting every t(n - j) against a single anchor term turns the claim
"L annihilates t" into "a fully expanded polynomial is identically zero",
which exact arithmetic settles unconditionally.

Builtin term descriptions (exact names):

* ``u-spec``  the central binomial: p = n, q = 4n-2, step 1
* ``v-spec``  its even-index aeration: p = n, q = 4(n-1), step 2, even support
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .exact import NEG_INF, Polynomial, integer_roots, n
from .operators import ShiftOperator, builtin_operator


class DegenerateRatioError(ValueError):
    """The term ratio has a vanishing side and cannot be iterated."""


class UnsupportedChainError(ValueError):
    """Contributions from several independent sub-chains in one residue class."""


@dataclass(frozen=True)
class HyperTermSpec:
    """A term satisfying p(n) * t(n) = q(n) * t(n - step).

    ``support`` lists the residues mod step where t may be nonzero; ``n_min``
    is the smallest index at which the one-step relation is valid.
    """

    step: int
    p: Polynomial
    q: Polynomial
    support: frozenset[int]
    n_min: int
    name: str = ""

    def __post_init__(self):
        if self.step not in (1, 2):
            raise ValueError("only step-1 and step-2 terms are supported")
        if self.p.is_zero or self.q.is_zero:
            raise DegenerateRatioError("ratio polynomials must be nonzero")
        object.__setattr__(self, "support", frozenset(self.support))
        if not self.support:
            raise ValueError("support must be nonempty")
        if any(r not in range(self.step) for r in self.support):
            raise ValueError(f"support residues must lie in 0..{self.step - 1}")

    def to_json(self) -> str:
        doc = {
            "step": self.step,
            "p": self.p.to_strings(),
            "q": self.q.to_strings(),
            "support": sorted(self.support),
            "n_min": self.n_min,
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "HyperTermSpec":
        doc = json.loads(text)
        return cls(
            step=doc["step"],
            p=Polynomial.from_strings(doc["p"]),
            q=Polynomial.from_strings(doc["q"]),
            support=frozenset(doc["support"]),
            n_min=doc["n_min"],
        )


def builtin_term(name: str) -> HyperTermSpec:
    """Look up a builtin term description by its exact name."""
    try:
        return _builtin_terms[name]
    except KeyError:
        raise ValueError(
            f"unknown term {name!r}; builtins: {', '.join(sorted(_builtin_terms))}"
        ) from None


_builtin_terms = {
    "u-spec": HyperTermSpec(
        step=1, p=n, q=4 * n - 2, support=frozenset({0}), n_min=1, name="u-spec"
    ),
    "v-spec": HyperTermSpec(
        step=2, p=n, q=4 * (n - 1), support=frozenset({0}), n_min=2, name="v-spec"
    ),
}


def builtin_term_names() -> tuple[str, ...]:
    return tuple(sorted(_builtin_terms))


@dataclass(frozen=True)
class ResidueReduction:
    """One residue class reduced to a cleared-numerator polynomial."""

    residue: int
    shifts: tuple[int, ...]              # contributing shift indices j
    anchor: int                          # the sum is rewritten against t(n - anchor)
    terms: tuple[Polynomial, ...]        # summand polynomials, one per shift
    denominator: Polynomial              # cleared common denominator
    numerator_raw: Polynomial            # expanded sum before normalization
    numerator: Polynomial                # normalized form
    formal_degree: int | float           # max summand degree, before cancellation
    floor: int                           # smallest n with every rewrite step valid

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero


@dataclass(frozen=True)
class CertificationReport:
    """Outcome of certifying one operator against one term description."""

    residues: tuple[ResidueReduction, ...]
    certified: bool
    floor: int
    degree_bound: int | float            # max formal degree across residues

    def detail(self) -> str:
        if self.certified:
            return f"all residue numerators vanish; valid from n={self.floor}"
        bad = [r.residue for r in self.residues if not r.is_zero]
        return f"nonzero numerator in residue class(es) {bad}"


def _reduce_residue(op: ShiftOperator, t: HyperTermSpec, residue: int) -> ResidueReduction:
    k = t.step
    shifts = [
        j
        for j in range(op.order + 1)
        if not op.coeffs[j].is_zero and (residue - j) % k in t.support
    ]
    if not shifts:
        return ResidueReduction(
            residue=residue, shifts=(), anchor=0, terms=(),
            denominator=Polynomial([1]), numerator_raw=Polynomial(),
            numerator=Polynomial(), formal_degree=NEG_INF, floor=op.order,
        )
    if len({j % k for j in shifts}) > 1:
        raise UnsupportedChainError(
            "contributing shifts span several residue chains; split the term "
            "into single-chain pieces first"
        )

    anchor = min(shifts)
    depth = (max(shifts) - anchor) // k
    # Rewrite chain: t(n - anchor - m*k) picks up p/q evaluated at
    # n - anchor - (m-1)*k for m = 1..depth.
    p_shift = [t.p.shifted(-(anchor + m * k)) for m in range(depth)]
    q_shift = [t.q.shifted(-(anchor + m * k)) for m in range(depth)]

    denominator = Polynomial([1])
    for f in q_shift:
        denominator = denominator * f

    terms = []
    formal_degree: int | float = NEG_INF
    total = Polynomial()
    for j in shifts:
        i = (j - anchor) // k
        term = op.coeffs[j]
        for f in p_shift[:i]:
            term = term * f
        for f in q_shift[i:]:
            term = term * f
        terms.append(term)
        formal_degree = max(formal_degree, term.degree)
        total = total + term

    floor = op.order
    if depth > 0:
        floor = max(floor, t.n_min + anchor + (depth - 1) * k)
        for f in q_shift:
            for root in integer_roots(f):
                floor = max(floor, root + 1)
    return ResidueReduction(
        residue=residue,
        shifts=tuple(shifts),
        anchor=anchor,
        terms=tuple(terms),
        denominator=denominator,
        numerator_raw=total,
        numerator=total.normalized(),
        formal_degree=formal_degree,
        floor=floor,
    )


def reduce_to_polynomial(op: ShiftOperator, t: HyperTermSpec, residue: int) -> Polynomial:
    """Cleared numerator of op applied to t on the class n = residue (mod step).

    The operator annihilates t on that class (above the validity floor) if
    and only if the returned polynomial is zero.
    """
    if residue not in range(t.step):
        raise ValueError(f"residue must lie in 0..{t.step - 1}")
    return _reduce_residue(op, t, residue).numerator


def certify_annihilation(op: ShiftOperator, t: HyperTermSpec) -> CertificationReport:
    """Reduce every residue class and certify iff all numerators vanish."""
    residues = tuple(_reduce_residue(op, t, r) for r in range(t.step))
    return CertificationReport(
        residues=residues,
        certified=all(r.is_zero for r in residues),
        floor=max(r.floor for r in residues),
        degree_bound=max(r.formal_degree for r in residues),
    )


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class IdentityCheckReport:
    checks: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_cancellation_identities() -> IdentityCheckReport:
    """Verify the parity-split cancellation identities behind the order-5 proof.

    Expands the even- and odd-class core combinations of the mathar
    coefficients and confirms both collapse to the zero polynomial, along
    with the factored forms of the two cleared sums. A failure here would
    mean the builtin operator was transcribed wrong.
    """
    c = builtin_operator("mathar").coeffs

    even_core = (n - 1) ** 2 + (2 * n**2 - 14 * n + 19) - (n - 2) * (3 * n - 10)
    odd_core = -(n - 2) * (3 * n - 4) + (n**2 + 5 * n - 19) + (n - 3) * (2 * n - 9)

    even_sum = (
        16 * (n - 1) * (n - 3) * c[0]
        + 4 * (n - 3) * n * c[2]
        + n * (n - 2) * c[4]
    )
    even_factored = 16 * n * (n - 3) * even_core

    odd_sum = (
        16 * (n - 2) * (n - 4) * c[1]
        + 4 * (n - 4) * (n - 1) * c[3]
        + (n - 1) * (n - 3) * c[5]
    )
    odd_factored = 32 * (n - 1) * (n - 4) * odd_core

    checks = (
        IdentityCheck("even-core-zero", even_core.is_zero, str(even_core)),
        IdentityCheck("odd-core-zero", odd_core.is_zero, str(odd_core)),
        IdentityCheck(
            "even-factorization",
            even_sum == even_factored,
            f"{even_sum} vs {even_factored}",
        ),
        IdentityCheck(
            "odd-factorization",
            odd_sum == odd_factored,
            f"{odd_sum} vs {odd_factored}",
        ),
    )
    return IdentityCheckReport(checks=checks)


def perturbed(op: ShiftOperator, shift: int, power: int, delta: int = 1) -> ShiftOperator:
    """Copy of op with delta * n^power added to the coefficient of a(n - shift)."""
    coeffs = list(op.coeffs)
    coeffs[shift] = coeffs[shift] + Polynomial([0] * power + [delta])
    return ShiftOperator(coeffs)
