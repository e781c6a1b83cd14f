"""Power series in ``t`` truncated at a fixed order, with BiPoly coefficients.

A series of order ``T`` carries the coefficients of ``t^0 .. t^T``; anything
above is unknown, not zero.  Binary operations therefore return the smaller
of the two orders and differentiation drops the order by one.

The exponential generating function ``exp(x t - nu t^2 / 2)`` is built here
straight from the exponential series, without touching any Hermite
recurrence, so it serves as an independent oracle for the other modules.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .poly import BiPoly

__all__ = [
    "TruncSeries",
    "series_from_argument",
    "series_exp",
    "series_diff_t",
    "series_coefficient",
    "series_mul",
    "series_add",
    "series_scale",
    "generating_function",
]


class TruncSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = [c if isinstance(c, BiPoly) else BiPoly.const(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("a truncated series needs order >= 0")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend(BiPoly.zero() for _ in range(order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[BiPoly, ...]:
        return self._coeffs

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return TruncSeries(self._coeffs[: order + 1])

    def __getitem__(self, k: int) -> BiPoly:
        return series_coefficient(self, k)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return series_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return series_add(self, series_scale(BiPoly.const(-1), other))

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, (BiPoly, int, Fraction)):
            return series_scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (BiPoly, int, Fraction)):
            return series_scale(other, self)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"TruncSeries([{', '.join(map(str, self._coeffs))}], order={self.order})"


def series_from_argument(T: int) -> TruncSeries:
    """The exponent ``x t - nu t^2 / 2`` as a series of order ``T``."""
    if T < 0:
        raise ValueError("order must be nonnegative")
    cs = [BiPoly.zero()] * (T + 1)
    if T >= 1:
        cs[1] = BiPoly.x()
    if T >= 2:
        cs[2] = BiPoly.monomial(Fraction(-1, 2), 0, 1)
    return TruncSeries(cs)


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    order = min(a.order, b.order)
    return TruncSeries([a.coeffs[k] + b.coeffs[k] for k in range(order + 1)])


def series_scale(p, s: TruncSeries) -> TruncSeries:
    return TruncSeries([p * c for c in s.coeffs])


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(order + 1):
        acc = BiPoly.zero()
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                acc = acc + ac[i] * bc[k - i]
        out.append(acc)
    return TruncSeries(out)


def series_exp(s: TruncSeries) -> TruncSeries:
    """``sum_{k<=T} s^k / k!`` for a series with zero constant term.

    Evaluated Horner-style, ``1 + s(1 + s/2(1 + s/3(...)))``; since ``s`` has
    no constant term, powers beyond ``T`` vanish and the sum is exact.
    """
    if s.coeffs[0]:
        raise ValueError(
            "series_exp needs a zero constant term; "
            f"got {s.coeffs[0]}, whose exponential is not a polynomial"
        )
    T = s.order
    one = TruncSeries([BiPoly.one()], order=T)
    acc = one
    for k in range(T, 0, -1):
        acc = one + series_scale(Fraction(1, k), series_mul(s, acc))
    return acc


def series_diff_t(s: TruncSeries) -> TruncSeries:
    if s.order < 1:
        raise ValueError("cannot differentiate an order-0 series: no coefficient survives")
    return TruncSeries([k * s.coeffs[k] for k in range(1, s.order + 1)])


def series_coefficient(s: TruncSeries, k: int) -> BiPoly:
    """Coefficient of ``t^k`` (not multiplied by ``k!``)."""
    if k < 0 or k > s.order:
        raise ValueError(f"coefficient t^{k} is outside the truncation order {s.order}")
    return s.coeffs[k]


@lru_cache(maxsize=16)
def generating_function(T: int) -> TruncSeries:
    """``F(t : x, nu) = exp(x t - nu t^2 / 2)`` to order ``T``, via :func:`series_exp`."""
    return series_exp(series_from_argument(T))


def hermite_from_oracle(n: int, T: int | None = None) -> BiPoly:
    """``n! [t^n] F``, the Hermite polynomial read off the exponential oracle."""
    T = n if T is None else T
    return math.factorial(n) * series_coefficient(generating_function(T), n)
