"""Exact integer polynomials in q, truncated power series in z with
polynomial coefficients, rational-function expansion, and finite
continued fractions.

All arithmetic is exact. Python integers cannot overflow, but every
canonicalisation still enforces a configurable coefficient magnitude
limit (default 2**63 - 1): blowing past it raises
:class:`CoefficientOverflowError` instead of silently producing numbers
no desk-scale enumeration could justify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .reports import CheckReport

__all__ = [
    "CoefficientOverflowError",
    "QPolynomial",
    "QSeries",
    "RationalGF",
    "DEFAULT_COEFF_LIMIT",
    "set_coefficient_limit",
    "get_coefficient_limit",
    "q_analog",
    "series_div",
    "expand_rational",
    "continued_fraction",
    "series_relation_check",
]


class CoefficientOverflowError(ArithmeticError):
    """A coefficient exceeded the configured magnitude limit."""


DEFAULT_COEFF_LIMIT = 2**63 - 1
_coeff_limit = DEFAULT_COEFF_LIMIT


def set_coefficient_limit(limit: int | None) -> None:
    """Set the global coefficient magnitude limit (None restores the default)."""
    global _coeff_limit
    if limit is None:
        _coeff_limit = DEFAULT_COEFF_LIMIT
        return
    if limit < 1:
        raise ValueError("coefficient limit must be positive")
    _coeff_limit = limit


def get_coefficient_limit() -> int:
    return _coeff_limit


@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in q with exact integer coefficients, index = power of q.

    Canonical form: no trailing zero coefficient; the zero polynomial is
    the empty tuple and has degree -inf.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = self.coeffs
        limit = _coeff_limit
        for c in coeffs:
            if c > limit or -c > limit:
                raise CoefficientOverflowError(
                    f"coefficient {c} exceeds the configured limit {limit}"
                )
        k = len(coeffs)
        while k and coeffs[k - 1] == 0:
            k -= 1
        if k != len(coeffs):
            object.__setattr__(self, "coeffs", coeffs[:k])

    # -- constructors ------------------------------------------------------

    @classmethod
    def of(cls, *coeffs: int) -> "QPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> "QPolynomial":
        return _ZERO

    @classmethod
    def one(cls) -> "QPolynomial":
        return _ONE

    @classmethod
    def q(cls) -> "QPolynomial":
        return _Q

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPolynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    # -- ring structure ----------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    @staticmethod
    def _coerce(other) -> "QPolynomial | None":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QPolynomial((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return _ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = _ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
                continue
            var = "q" if power == 1 else f"q^{power}"
            if c == 1:
                terms.append(var)
            elif c == -1:
                terms.append(f"-{var}")
            else:
                terms.append(f"{c}{var}")
        text = " + ".join(terms)
        return text.replace("+ -", "- ")


_ZERO = object.__new__(QPolynomial)
object.__setattr__(_ZERO, "coeffs", ())
_ONE = QPolynomial((1,))
_Q = QPolynomial((0, 1))


def q_analog(n: int, k: int = 1) -> QPolynomial:
    """The q-analog [n] evaluated at q^k: 1 + q^k + q^{2k} + ... + q^{(n-1)k}.

    >>> str(q_analog(3, 2))
    '1 + q^2 + q^4'
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    coeffs = [0] * ((n - 1) * k + 1)
    for j in range(n):
        coeffs[j * k] = 1
    return QPolynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# Truncated power series in z
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QSeries:
    """Power series in z truncated at z^order; coefficients are QPolynomials.

    Arithmetic never reads or writes beyond the truncation order, and a
    binary operation returns the min of the two operand orders.
    """

    coeffs: tuple[QPolynomial, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series carries at least the z^0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_polys(cls, polys: Sequence[QPolynomial], order: int) -> "QSeries":
        padded = list(polys[: order + 1])
        padded += [_ZERO] * (order + 1 - len(padded))
        return cls(tuple(padded))

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.from_polys([_ONE], order)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls.from_polys([], order)

    def coefficient(self, power: int) -> QPolynomial:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else _ZERO

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series truncated at {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1])

    @staticmethod
    def _coerce(other) -> "QSeries | None":
        if isinstance(other, QSeries):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        order = min(self.order, o.order)
        return QSeries(tuple(self.coeffs[i] + o.coeffs[i] for i in range(order + 1)))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        order = min(self.order, o.order)
        return QSeries(tuple(self.coeffs[i] - o.coeffs[i] for i in range(order + 1)))

    def __mul__(self, other):
        if isinstance(other, (QPolynomial, int)) and not isinstance(other, bool):
            return QSeries(tuple(c * other for c in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        order = min(self.order, o.order)
        out = []
        for m in range(order + 1):
            acc = _ZERO
            for i in range(m + 1):
                a = self.coeffs[i]
                if a.is_zero():
                    continue
                b = o.coeffs[m - i]
                if not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return QSeries(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "QSeries":
        """Multiply by z^k (same truncation order, top coefficients drop off)."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return QSeries((_ZERO,) * min(k, self.order + 1) + self.coeffs[: self.order + 1 - k])

    def __str__(self) -> str:
        return " ; ".join(f"z^{i}: {c}" for i, c in enumerate(self.coeffs))


def series_div(num: QSeries, den: QSeries) -> QSeries:
    """The unique series S with den * S == num modulo z^(order+1).

    The constant term of den must be the constant +1 or -1 so that the
    expansion stays over the integers.
    """
    order = min(num.order, den.order)
    head = den.coeffs[0]
    if head.coeffs not in ((1,), (-1,)):
        raise ValueError(
            f"denominator constant term must be +1 or -1, got {head}"
        )
    sign = head.coeffs[0]
    out: list[QPolynomial] = []
    for m in range(order + 1):
        acc = num.coefficient(m)
        for j in range(1, m + 1):
            d = den.coeffs[j]
            if not d.is_zero():
                acc = acc - d * out[m - j]
        out.append(acc if sign == 1 else -acc)
    return QSeries(tuple(out))


# ---------------------------------------------------------------------------
# Rational generating functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalGF:
    """Ratio of two polynomials in z whose coefficients are QPolynomials.

    The denominator's constant term must be +1 or -1 so that the series
    expansion has integer polynomial coefficients.
    """

    numerator: tuple[QPolynomial, ...]
    denominator: tuple[QPolynomial, ...]

    def __post_init__(self):
        if not self.denominator:
            raise ValueError("denominator must be nonzero")
        head = self.denominator[0]
        if head.coeffs not in ((1,), (-1,)):
            raise ValueError(
                f"denominator constant term must be +1 or -1, got {head}"
            )


def zpoly_mul(a: Sequence[QPolynomial], b: Sequence[QPolynomial]) -> tuple[QPolynomial, ...]:
    """Convolution of two z-polynomials with QPolynomial coefficients."""
    if not a or not b:
        return ()
    out: list[QPolynomial] = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            if not cb.is_zero():
                out[i + j] = out[i + j] + ca * cb
    return tuple(out)


def expand_rational(g: RationalGF, order: int) -> QSeries:
    """Expand numerator/denominator as a series up to z^order.

    >>> one = QPolynomial.one()
    >>> [str(c) for c in expand_rational(RationalGF((one,), (one, -one)), 4).coeffs]
    ['1', '1', '1', '1', '1']
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    num = QSeries.from_polys(g.numerator, order)
    den = QSeries.from_polys(g.denominator, order)
    return series_div(num, den)


def continued_fraction(levels: Sequence[Sequence[QPolynomial]], order: int) -> QSeries:
    """Evaluate the finite continued fraction

        1 / (1 - a_1 / (1 - a_2 / (... / (1 - a_D) ...)))

    truncated at z^order, where each level a_i is a z-polynomial with
    QPolynomial coefficients and must be divisible by z. Because of that
    divisibility, depth D >= order pins every coefficient up to z^order:
    deeper levels cannot change them. Empty levels give the constant 1.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    for idx, level in enumerate(levels, 1):
        if len(level) > 0 and not level[0].is_zero():
            raise ValueError(f"level {idx} has a nonzero constant term; it must be divisible by z")
    one = QSeries.one(order)
    value = one
    for level in reversed(list(levels)):
        a = QSeries.from_polys(tuple(level), order)
        value = series_div(one, one - a * value)
    return value


def series_relation_check(lhs: QSeries, rhs: QSeries, name: str = "series_relation") -> CheckReport:
    """Coefficientwise comparison of two equally truncated series.

    Passing requires every coefficient to match; a failure reports the
    smallest differing power of z together with both polynomials.
    """
    if lhs.order != rhs.order:
        raise ValueError(f"truncation orders differ: {lhs.order} vs {rhs.order}")
    for m in range(lhs.order + 1):
        if lhs.coeffs[m] != rhs.coeffs[m]:
            return CheckReport(
                name=name,
                status="fail",
                n_range=(0, lhs.order),
                counterexample={
                    "n": m,
                    "witness": f"z^{m}",
                    "lhs": list(lhs.coeffs[m].coeffs),
                    "rhs": list(rhs.coeffs[m].coeffs),
                },
            )
    return CheckReport(name=name, status="pass", n_range=(0, lhs.order))
