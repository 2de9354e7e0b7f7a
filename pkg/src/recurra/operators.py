"""Backward shift-operator algebra over polynomial coefficients.

An operator of order r maps a sequence a to n -> sum_j c_j(n) * a(n - j),
j = 0..r. Operators are immutable and always held in normalized form:
integer coefficients, joint content 1, positive leading coefficient on c_0.

Builtin operators (exact names):

* ``mathar``  the conjectured order-5 annihilator of A032123
* ``u-op``    n*a(n) - (4n-2)*a(n-1)
* ``v-op``    n*a(n) - 4(n-1)*a(n-2)
"""
from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Polynomial, n
from .linalg import nullspace
from .sequences import SequenceSource


class LclmCapError(RuntimeError):
    """No common left multiple found within the order/degree caps."""


class ShiftOperator:
    """Backward recurrence operator sum_{j=0..r} c_j(n) * a(n-j)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Polynomial]):
        polys = [p if isinstance(p, Polynomial) else Polynomial([p]) for p in coeffs]
        if not polys:
            raise ValueError("an operator needs at least the order-0 coefficient")
        if polys[0].is_zero or polys[-1].is_zero:
            raise ValueError("c_0 and the top coefficient must be nonzero")
        object.__setattr__(self, "coeffs", tuple(_joint_normalize(polys)))

    def __setattr__(self, name, value):
        raise AttributeError("ShiftOperator is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ShiftOperator(order={self.order}, coeffs={[str(p) for p in self.coeffs]})"

    def __mul__(self, other: "ShiftOperator") -> "ShiftOperator":
        return operator_mul(self, other)

    # -- application -------------------------------------------------------

    def apply(self, s: SequenceSource, at: int) -> int:
        """Exact value of sum_j c_j(at) * s(at - j)."""
        if at < self.order:
            raise ValueError(f"need at >= order={self.order}, got {at}")
        total = 0
        for j, rows in enumerate(self._int_rows()):
            acc = 0
            for c in reversed(rows):
                acc = acc * at + c
            if acc:
                total += acc * s.term(at - j)
        return total

    _int_rows_cache: dict = {}

    def _int_rows(self) -> tuple[tuple[int, ...], ...]:
        rows = ShiftOperator._int_rows_cache.get(self.coeffs)
        if rows is None:
            rows = tuple(p.integer_coeffs() for p in self.coeffs)
            ShiftOperator._int_rows_cache[self.coeffs] = rows
        return rows

    # -- file format ---------------------------------------------------------

    def to_json(self) -> str:
        doc = {
            "convention": "backward",
            "order": self.order,
            "coeffs": [p.to_strings() for p in self.coeffs],
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ShiftOperator":
        """Parse an operator file.

        The native convention is backward (c_j multiplies a(n-j)). Files
        declaring ``convention: "forward"`` (d_j multiplies a(n+j)) are
        converted on the way in: substituting n -> n - order reverses the
        coefficient list and shifts every polynomial by -order.
        """
        doc = json.loads(text)
        convention = doc.get("convention")
        if convention not in ("backward", "forward"):
            raise ValueError(
                f"operator convention must be backward or forward, got {convention!r}"
            )
        coeffs = [Polynomial.from_strings(row) for row in doc["coeffs"]]
        if len(coeffs) != doc["order"] + 1:
            raise ValueError("declared order does not match the coefficient count")
        if convention == "forward":
            order = doc["order"]
            coeffs = [p.shifted(-order) for p in reversed(coeffs)]
        return cls(coeffs)


def _joint_normalize(polys: list[Polynomial]) -> list[Polynomial]:
    den = 1
    for p in polys:
        for c in p.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
    content = 0
    for p in polys:
        for c in p.coeffs:
            content = math.gcd(content, int(c * den))
    scale = Fraction(den, content)
    if polys[0].leading_coefficient < 0:
        scale = -scale
    return [p * scale for p in polys]


def builtin_operator(name: str) -> ShiftOperator:
    """Look up a builtin operator by its exact name."""
    try:
        return _builtin_factories[name]()
    except KeyError:
        raise ValueError(
            f"unknown operator {name!r}; builtins: {', '.join(sorted(_builtin_factories))}"
        ) from None


def builtin_operator_names() -> tuple[str, ...]:
    return tuple(sorted(_builtin_factories))


def _mathar() -> ShiftOperator:
    return ShiftOperator(
        [
            n * (n - 1),
            -2 * (n - 1) * (3 * n - 4),
            4 * (2 * n**2 - 14 * n + 19),
            8 * (n**2 + 5 * n - 19),
            -16 * (n - 3) * (3 * n - 10),
            32 * (n - 4) * (2 * n - 9),
        ]
    )


def _u_op() -> ShiftOperator:
    return ShiftOperator([n, -(4 * n - 2)])


def _v_op() -> ShiftOperator:
    return ShiftOperator([n, Polynomial(), -4 * (n - 1)])


_builtin_factories = {"mathar": _mathar, "u-op": _u_op, "v-op": _v_op}


def apply_at(op: ShiftOperator, s: SequenceSource, at: int) -> int:
    """Apply the operator to a sequence at one index; exact integer result."""
    return op.apply(s, at)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking that an operator annihilates a range of terms."""

    n_from: int
    n_to: int
    passed: bool
    failure_index: int | None = None
    residual: int | None = None
    wall_time: float = 0.0

    def detail(self) -> str:
        if self.passed:
            return f"all residuals zero on {self.n_from}..{self.n_to}"
        return f"residual {self.residual} at n={self.failure_index}"


def verify_range(
    op: ShiftOperator, s: SequenceSource, n_from: int, n_to: int
) -> VerificationReport:
    """Check op annihilates s on n_from..n_to, stopping at the first failure."""
    if n_from < op.order:
        raise ValueError(f"range must start at or above the order {op.order}")
    if n_from > n_to:
        raise ValueError("empty verification range")
    start = time.perf_counter()
    for i in range(n_from, n_to + 1):
        r = op.apply(s, i)
        if r != 0:
            return VerificationReport(
                n_from, n_to, False, failure_index=i, residual=r,
                wall_time=time.perf_counter() - start,
            )
    return VerificationReport(n_from, n_to, True, wall_time=time.perf_counter() - start)


def operator_mul(a: ShiftOperator, b: ShiftOperator) -> ShiftOperator:
    """Composition "a after b"; order adds, coefficients pick up index shifts."""
    out = [Polynomial() for _ in range(a.order + b.order + 1)]
    for i, ai in enumerate(a.coeffs):
        if ai.is_zero:
            continue
        for j, bj in enumerate(b.coeffs):
            if bj.is_zero:
                continue
            out[i + j] = out[i + j] + ai * bj.shifted(-i)
    return ShiftOperator(out)


def lclm_with_cofactors(
    a: ShiftOperator,
    b: ShiftOperator,
    order_cap: int = 8,
    degree_cap: int = 10,
) -> tuple[ShiftOperator, ShiftOperator, ShiftOperator]:
    """Least common left multiple with its cofactors: L = P*a = Q*b.

    Searches orders ascending from max(order(a), order(b)), and cofactor
    coefficient degrees ascending from 0, solving an exact linear system at
    each (order, degree). Within a nullspace, ties break toward the
    lexicographically smallest normalized coefficient vector.
    """
    if order_cap <= 0 or degree_cap < 0:
        raise ValueError("caps must be positive")
    for order in range(max(a.order, b.order), order_cap + 1):
        for degree in range(degree_cap + 1):
            found = _lclm_at(a, b, order, degree)
            if found is not None:
                return found
    raise LclmCapError(
        f"no common left multiple within order_cap={order_cap}, "
        f"degree_cap={degree_cap}"
    )


def lclm(
    a: ShiftOperator,
    b: ShiftOperator,
    order_cap: int = 8,
    degree_cap: int = 10,
) -> ShiftOperator:
    """Least common left multiple of two operators (see lclm_with_cofactors)."""
    return lclm_with_cofactors(a, b, order_cap, degree_cap)[0]


def _cofactor_expansion(
    cof_coeffs: Sequence[Polynomial], base: ShiftOperator, order: int
) -> list[Polynomial]:
    out = [Polynomial() for _ in range(order + 1)]
    for i, pi in enumerate(cof_coeffs):
        for j, cj in enumerate(base.coeffs):
            out[i + j] = out[i + j] + pi * cj.shifted(-i)
    return out


def _lclm_at(a, b, order, degree):
    na, nb = order - a.order + 1, order - b.order + 1  # cofactor lengths
    cols = (na + nb) * (degree + 1)

    # Multiplier polynomial for each unknown: x_{i,e} contributes
    # n^e * c_{t-i}(n - i) to the shift-t coefficient of the product.
    def multipliers(base, count, sign):
        rows = {}
        for i in range(count):
            for e in range(degree + 1):
                for j, cj in enumerate(base.coeffs):
                    t = i + j
                    poly = sign * Polynomial([0] * e + [1]) * cj.shifted(-i)
                    rows.setdefault(t, []).append((i * (degree + 1) + e, poly))
        return rows

    a_terms = multipliers(a, na, 1)
    b_terms = multipliers(b, nb, -1)
    offset = na * (degree + 1)

    eq_rows = []
    for t in range(order + 1):
        per_col: list[Polynomial] = [Polynomial()] * cols
        for col, poly in a_terms.get(t, ()):
            per_col[col] = per_col[col] + poly
        for col, poly in b_terms.get(t, ()):
            per_col[offset + col] = per_col[offset + col] + poly
        max_deg = max((p.degree for p in per_col if not p.is_zero), default=-1)
        if max_deg < 0:
            continue
        for power in range(int(max_deg) + 1):
            eq_rows.append([p[power] for p in per_col])

    basis = nullspace(eq_rows, ncols=cols)
    candidates = []
    for vec in basis:
        p_cof = [
            Polynomial(vec[i * (degree + 1) : (i + 1) * (degree + 1)])
            for i in range(na)
        ]
        q_cof = [
            Polynomial(vec[offset + i * (degree + 1) : offset + (i + 1) * (degree + 1)])
            for i in range(nb)
        ]
        product = _cofactor_expansion(p_cof, a, order)
        if product[0].is_zero or product[order].is_zero:
            continue
        if p_cof[-1].is_zero or q_cof[-1].is_zero:
            continue
        candidates.append((ShiftOperator(product), p_cof, q_cof))
    if not candidates:
        return None
    lclm_op, p_cof, q_cof = min(
        candidates, key=lambda c: tuple(p.coeffs for p in c[0].coeffs)
    )
    return (
        lclm_op,
        ShiftOperator(p_cof),
        ShiftOperator(q_cof),
    )
