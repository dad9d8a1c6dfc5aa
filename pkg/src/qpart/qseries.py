"""Truncated power series in q with exact integer coefficients.

A :class:`QSeries` of order N stands for a series modulo q**(N+1).  Binary
operations insist on equal orders rather than re-truncating silently, so a
precision mistake in a chain of identities surfaces as an error.

q-Pochhammer symbols are built from :class:`Monomial` arguments ``±q**a``::

    >>> poch_finite(Monomial(1, 1), 1, 2, 3)        # (q;q)_2
    QSeries(1 - q - q^2 + q^3, order=3)
    >>> theta_sum(-1, 2, 8)
    QSeries(1 - 2q^2 + 2q^8, order=8)
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

from qpart import _kernels

__all__ = [
    "QSeriesError",
    "OrderMismatchError",
    "NotInvertibleError",
    "DegenerateArgumentError",
    "QSeries",
    "Monomial",
    "XQSeries",
    "make_series",
    "zero",
    "one",
    "monomial",
    "add",
    "sub",
    "mul",
    "negate",
    "invert",
    "product",
    "poch_finite",
    "poch_inf",
    "poch_multi",
    "theta_sum",
    "xq_shift",
    "xq_mul_xq",
    "xq_add",
    "xq_sub",
]


class QSeriesError(ValueError):
    pass


class OrderMismatchError(QSeriesError):
    pass


class NotInvertibleError(QSeriesError):
    pass


class DegenerateArgumentError(QSeriesError):
    pass


def _format_terms(coeffs: Sequence[int], var: str = "q") -> str:
    terms = []
    for n, c in enumerate(coeffs):
        if not c:
            continue
        if n == 0:
            body = str(abs(c))
        else:
            power = var if n == 1 else f"{var}^{n}"
            body = power if abs(c) == 1 else f"{abs(c)}{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class QSeries:
    """Coefficients ``coeffs[0..order]`` of a series modulo q**(order+1)."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise QSeriesError(f"order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise QSeriesError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(tuple(other * c for c in self.coeffs), self.order)
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return negate(self)

    def __repr__(self):
        return f"QSeries({_format_terms(self.coeffs)}, order={self.order})"

    def __str__(self):
        return f"{_format_terms(self.coeffs)} + O(q^{self.order + 1})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class Monomial:
    """The Pochhammer argument ``sign * q**exponent``."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise QSeriesError(f"sign must be +1 or -1, got {self.sign}")
        if self.exponent < 0:
            raise QSeriesError(f"exponent must be >= 0, got {self.exponent}")


def make_series(coeffs: Iterable[int], order: int) -> QSeries:
    """Pad ``coeffs`` with zeros up to ``order``; overlong input is an error."""
    values = [int(c) for c in coeffs]
    if len(values) > order + 1:
        raise QSeriesError(
            f"{len(values)} coefficients do not fit in order {order}"
        )
    values.extend([0] * (order + 1 - len(values)))
    return QSeries(tuple(values), order)


def zero(order: int) -> QSeries:
    return QSeries((0,) * (order + 1), order)


def one(order: int) -> QSeries:
    return make_series([1], order)


def monomial(coeff: int, exponent: int, order: int) -> QSeries:
    """``coeff * q**exponent``, which is zero when exponent exceeds the order."""
    values = [0] * (order + 1)
    if exponent <= order:
        values[exponent] = coeff
    return QSeries(tuple(values), order)


def _check_orders(a: QSeries, b: QSeries) -> int:
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")
    return a.order


def add(a: QSeries, b: QSeries) -> QSeries:
    _check_orders(a, b)
    return QSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.order)


def sub(a: QSeries, b: QSeries) -> QSeries:
    _check_orders(a, b)
    return QSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.order)


def negate(a: QSeries) -> QSeries:
    return QSeries(tuple(-x for x in a.coeffs), a.order)


def mul(a: QSeries, b: QSeries) -> QSeries:
    order = _check_orders(a, b)
    return QSeries(tuple(_kernels.mul_trunc(a.coeffs, b.coeffs, order)), order)


def product(factors: Iterable[QSeries], order: int) -> QSeries:
    """Multiply a sequence of series, starting from 1 at ``order``."""
    out = one(order)
    for f in factors:
        out = mul(out, f)
    return out


def invert(a: QSeries) -> QSeries:
    """Multiplicative inverse; the constant term must be a unit of Z."""
    if a.coeffs[0] not in (1, -1):
        raise NotInvertibleError(
            f"constant term {a.coeffs[0]} is not a unit in the integers"
        )
    return QSeries(tuple(_kernels.invert_trunc(a.coeffs, a.order)), a.order)


def _times_binomial(values: list[int], sign: int, exponent: int) -> None:
    """In place: values *= (1 - sign * q**exponent), truncated to len(values)."""
    if exponent == 0:
        factor = 1 - sign
        for n in range(len(values)):
            values[n] *= factor
        return
    for n in range(len(values) - 1, exponent - 1, -1):
        values[n] -= sign * values[n - exponent]


def poch_finite(arg: Monomial, base_exp: int, n: int, order: int) -> QSeries:
    """``(arg; q**base_exp)_n``: product of (1 - arg*q**(base_exp*i)), i < n."""
    if base_exp < 1:
        raise QSeriesError(f"base exponent must be >= 1, got {base_exp}")
    if n < 0:
        raise QSeriesError(f"n must be >= 0, got {n}")
    values = [1] + [0] * order
    for i in range(n):
        e = arg.exponent + base_exp * i
        if e > order:
            break
        _times_binomial(values, arg.sign, e)
    return QSeries(tuple(values), order)


def poch_inf(arg: Monomial, base_exp: int, order: int) -> QSeries:
    """``(arg; q**base_exp)_inf`` modulo q**(order+1).

    Only factors whose exponent is at most ``order`` are multiplied in;
    every other factor is 1 to this precision.
    """
    if base_exp < 1:
        raise QSeriesError(f"base exponent must be >= 1, got {base_exp}")
    if arg.exponent == 0 and arg.sign == 1:
        raise DegenerateArgumentError("(1; q)_inf vanishes identically")
    values = [1] + [0] * order
    e = arg.exponent
    while e <= order:
        _times_binomial(values, arg.sign, e)
        e += base_exp
    return QSeries(tuple(values), order)


def poch_multi(args: Iterable[Monomial], base_exp: int, order: int) -> QSeries:
    """``(a_1, ..., a_k; q**base_exp)_inf`` as the product of single symbols."""
    values = [1] + [0] * order
    for arg in args:
        if arg.exponent == 0 and arg.sign == 1:
            raise DegenerateArgumentError("(1; q)_inf vanishes identically")
        if base_exp < 1:
            raise QSeriesError(f"base exponent must be >= 1, got {base_exp}")
        e = arg.exponent
        while e <= order:
            _times_binomial(values, arg.sign, e)
            e += base_exp
    return QSeries(tuple(values), order)


def theta_sum(sign: int, quad_coeff: int, order: int) -> QSeries:
    """Bilateral sum of sign**n * q**(quad_coeff * n**2) over all integers n."""
    if sign not in (1, -1):
        raise QSeriesError(f"sign must be +1 or -1, got {sign}")
    if quad_coeff < 1:
        raise QSeriesError(f"quadratic coefficient must be >= 1, got {quad_coeff}")
    values = [0] * (order + 1)
    bound = isqrt(order // quad_coeff)
    for n in range(-bound, bound + 1):
        values[quad_coeff * n * n] += sign ** abs(n)
    return QSeries(tuple(values), order)


@dataclass(frozen=True)
class XQSeries:
    """Bivariate table ``coeffs[m][n]``: coefficient of x**m q**n.

    Rows run over the x-degree 0..M, columns over the q-degree 0..N.
    """

    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.coeffs or not self.coeffs[0]:
            raise QSeriesError("XQSeries needs at least one row and column")
        width = len(self.coeffs[0])
        if any(len(row) != width for row in self.coeffs):
            raise QSeriesError("XQSeries rows must all have the same length")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "XQSeries":
        return cls(tuple(tuple(int(c) for c in row) for row in rows))

    @classmethod
    def zeros(cls, x_order: int, q_order: int) -> "XQSeries":
        return cls(((0,) * (q_order + 1),) * (x_order + 1))

    @property
    def x_order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def q_order(self) -> int:
        return len(self.coeffs[0]) - 1

    def __getitem__(self, key):
        m, n = key
        return self.coeffs[m][n]

    def replace(self, m: int, n: int, value: int) -> "XQSeries":
        """Copy with a single entry changed."""
        rows = [list(row) for row in self.coeffs]
        rows[m][n] = value
        return XQSeries.from_rows(rows)

    def __add__(self, other):
        return xq_add(self, other)

    def __sub__(self, other):
        return xq_sub(self, other)


def _check_dims(a: XQSeries, b: XQSeries) -> None:
    if (a.x_order, a.q_order) != (b.x_order, b.q_order):
        raise OrderMismatchError(
            f"dimensions differ: {(a.x_order, a.q_order)} vs {(b.x_order, b.q_order)}"
        )


def xq_add(a: XQSeries, b: XQSeries) -> XQSeries:
    _check_dims(a, b)
    return XQSeries(
        tuple(
            tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.coeffs, b.coeffs)
        )
    )


def xq_sub(a: XQSeries, b: XQSeries) -> XQSeries:
    _check_dims(a, b)
    return XQSeries(
        tuple(
            tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a.coeffs, b.coeffs)
        )
    )


def xq_shift(s: XQSeries) -> XQSeries:
    """Substitute x -> xq: entry [m][n] becomes old [m][n-m]."""
    width = s.q_order + 1
    rows = []
    for m, row in enumerate(s.coeffs):
        if m >= width:
            rows.append((0,) * width)
        else:
            rows.append((0,) * m + row[: width - m])
    return XQSeries(tuple(rows))


def xq_mul_xq(s: XQSeries) -> XQSeries:
    """Multiply by the monomial x*q; the top row and column fall off."""
    width = s.q_order + 1
    zero_row = (0,) * width
    rows = [zero_row]
    for row in s.coeffs[:-1]:
        rows.append((0,) + row[:-1])
    return XQSeries(tuple(rows))
