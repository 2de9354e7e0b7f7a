"""Exact rational arithmetic, dense univariate polynomials, truncated power series.

Rationals are ``fractions.Fraction`` (always stored reduced, positive
denominator). Polynomials are dense coefficient tuples over Fraction in the
formal variable ``n``; everything here is an immutable value and every
operation is a pure function, so sharing across threads is safe.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

#: Degree of the zero polynomial. A tagged sentinel rather than -1 so that
#: degree comparisons and sums stay honest (NEG_INF + d == NEG_INF).
NEG_INF = float("-inf")

_Scalar = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")


class Polynomial:
    """Dense univariate polynomial over exact rationals.

    ``coeffs[i]`` is the coefficient of n^i; the trailing coefficient is
    nonzero (the zero polynomial has an empty coefficient tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[_Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Polynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; x may be an int, a Fraction, or a Polynomial."""
        if isinstance(x, Polynomial):
            acc = Polynomial()
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shifted(self, delta: int) -> "Polynomial":
        """The polynomial p(n + delta)."""
        return self(Polynomial([delta, 1]))

    # -- canonical form ----------------------------------------------------

    def normalized(self) -> "Polynomial":
        """Rational rescaling to integer coefficients, content 1, positive lead."""
        if not self.coeffs:
            return self
        den_lcm = 1
        for c in self.coeffs:
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        ints = [int(c * den_lcm) for c in self.coeffs]
        content = 0
        for v in ints:
            content = math.gcd(content, v)
        if ints[-1] < 0:
            content = -content
        return Polynomial([v // content for v in ints])

    def integer_coeffs(self) -> tuple[int, ...]:
        """Coefficients as plain ints; raises if any coefficient is fractional."""
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError(f"polynomial {self} has non-integer coefficients")
        return tuple(int(c) for c in self.coeffs)

    # -- text forms ----------------------------------------------------------

    def to_strings(self) -> list[str]:
        """Coefficient list low-to-high as decimal strings (file format)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Polynomial":
        return cls([Fraction(s) for s in items])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}n" if i == 1 else f"{mag}n^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial([x])
    return NotImplemented


#: The formal variable. Module-level so callers can write e.g. 8*(n**2 + 5*n - 19).
n = Polynomial([0, 1])

ZERO = Polynomial()
ONE = Polynomial([1])


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact product; deg(a*b) = deg(a) + deg(b) for nonzero inputs."""
    return a * b


def poly_eval(p: Polynomial, x: _Scalar) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    return p(x)


def poly_normalize(p: Polynomial) -> Polynomial:
    """Canonical integer form: content 1, positive leading coefficient."""
    return p.normalized()


def falling_factorial(j: int) -> Polynomial:
    """n(n-1)...(n-j+1), the monic degree-j falling factorial; j=0 gives 1."""
    if j < 0:
        raise ValueError("falling factorial length must be nonnegative")
    out = ONE
    for i in range(j):
        out = out * (n - i)
    return out


def integer_roots(p: Polynomial) -> list[int]:
    """All integer roots of a nonzero polynomial, ascending."""
    if p.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere")
    coeffs = list(p.normalized().integer_coeffs())
    roots = []
    low = 0
    while coeffs[low] == 0:
        low += 1
    if low > 0:
        roots.append(0)
        coeffs = coeffs[low:]
    const = abs(coeffs[0])
    if len(coeffs) > 1:
        d = 1
        while d * d <= const:
            if const % d == 0:
                for r in (d, -d, const // d, -(const // d)):
                    if p(r) == 0:
                        roots.append(r)
            d += 1
    return sorted(set(roots))


class TruncatedSeries:
    """Power series truncated at a fixed order: coefficients of x^0 .. x^N."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[_Scalar], order: int):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = [_as_fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], order
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = _as_fraction(other)
            return TruncatedSeries([c * k for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        return TruncatedSeries(
            _mul_trunc(self.coeffs, other.coeffs, order + 1), order
        )

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def _mul_trunc(a, b, length):
    out = [Fraction(0)] * length
    for i, ai in enumerate(a[:length]):
        if ai == 0:
            continue
        for j in range(min(length - i, len(b))):
            out[i + j] += ai * b[j]
    return out


def series_inv_sqrt(f: TruncatedSeries, order: int) -> TruncatedSeries:
    """f^(-1/2) mod x^(order+1) by Newton iteration with doubling precision.

    Requires constant term 1; the result g satisfies g*g*f == 1 truncated.
    """
    if f.coeffs[0] != 1:
        raise ValueError("inverse square root needs constant term 1")
    target = order + 1
    fc = list(f.coeffs) + [Fraction(0)] * (target - len(f.coeffs))
    g = [Fraction(1)]
    prec = 1
    while prec < target:
        prec = min(2 * prec, target)
        fg2 = _mul_trunc(_mul_trunc(g, g, prec), fc, prec)
        corr = [Fraction(3) - fg2[0]] + [-c for c in fg2[1:]]
        g = [c / 2 for c in _mul_trunc(g, corr, prec)]
    return TruncatedSeries(g, order)
