"""The three Hermite families built from their raising operators.

* variance nu:     H_n^(nu) = (x - nu d/dx)^n 1
* probabilists':   H*_n     = (x - d/dx)^n 1
* physicists':     H_n      = (2x - d/dx)^n 1

Each family is grown incrementally and the computed prefix is cached, so a
request for ``n`` makes ``0..n`` available.  Cached polynomials are
immutable and may be shared freely; cache growth is serialized by a lock.
"""

from __future__ import annotations

import enum
import threading
from fractions import Fraction
from typing import Callable

from .poly import BiPoly

__all__ = [
    "HermiteKind",
    "ParityError",
    "apply_appell_operator",
    "hermite",
    "hermite_variance",
    "hermite_physicists",
    "hermite_probabilists",
    "convert_probabilists_to_physicists",
    "convert_physicists_to_probabilists",
    "identify_physicists_as_variance",
    "identify_probabilists_as_variance",
]

_X = BiPoly.x()
_NU = BiPoly.nu()
_TWO_X = BiPoly.monomial(2, 1, 0)


class HermiteKind(enum.Enum):
    PHYSICISTS = "phys"
    PROBABILISTS = "prob"
    VARIANCE = "variance"


class ParityError(ValueError):
    """A Hermite polynomial carried an x-exponent of the wrong parity."""


def apply_appell_operator(p: BiPoly) -> BiPoly:
    """``(x - nu d/dx) p``."""
    return _X * p - _NU * p.diff_x()


def _prob_step(p: BiPoly) -> BiPoly:
    return _X * p - p.diff_x()


def _phys_step(p: BiPoly) -> BiPoly:
    return _TWO_X * p - p.diff_x()


class _Family:
    def __init__(self, step: Callable[[BiPoly], BiPoly]):
        self._step = step
        self._values = [BiPoly.one()]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> BiPoly:
        if n < 0:
            raise ValueError("Hermite index must be nonnegative")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(values) <= n:
                values.append(self._step(values[-1]))
            return values[n]


_variance = _Family(apply_appell_operator)
_probabilists = _Family(_prob_step)
_physicists = _Family(_phys_step)


def hermite_variance(n: int) -> BiPoly:
    """H_n^(nu)(x), by ``n`` applications of the Appell raising operator to 1."""
    return _variance(n)


def hermite_probabilists(n: int) -> BiPoly:
    return _probabilists(n)


def hermite_physicists(n: int) -> BiPoly:
    return _physicists(n)


def hermite(kind: HermiteKind | str, n: int) -> BiPoly:
    kind = HermiteKind(kind)
    if kind is HermiteKind.PHYSICISTS:
        return hermite_physicists(n)
    if kind is HermiteKind.PROBABILISTS:
        return hermite_probabilists(n)
    return hermite_variance(n)


def _rescale_by_parity(p: BiPoly, n: int, sign: int) -> BiPoly:
    # c x^j -> c 2^(sign (n+j)/2) x^j; n + j must be even
    out = {}
    for (dx, dn), c in p.terms.items():
        if (n + dx) % 2:
            raise ParityError(f"term x^{dx} in a degree-{n} Hermite polynomial breaks parity")
        e = (n + dx) // 2
        out[(dx, dn)] = c * (Fraction(2) ** (sign * e))
    return BiPoly(out)


def convert_probabilists_to_physicists(n: int) -> BiPoly:
    """H_n(x) = 2^(n/2) H*_n(sqrt(2) x), carried out without irrationals.

    The scaling of ``x^j`` is ``2^(n/2) * sqrt(2)^j = 2^((n+j)/2)``, an
    integer power of two because H*_n only has exponents ``j = n (mod 2)``.
    """
    return _rescale_by_parity(hermite_probabilists(n), n, +1)


def convert_physicists_to_probabilists(n: int) -> BiPoly:
    """H*_n(x) = 2^(-n/2) H_n(x / sqrt(2)), the inverse monomial rescaling."""
    return _rescale_by_parity(hermite_physicists(n), n, -1)


def identify_physicists_as_variance(n: int) -> BiPoly:
    """H_n^(2)(2x), which coincides with the physicists' H_n(x)."""
    return hermite_variance(n).subs(nu=2, x_scale=2)


def identify_probabilists_as_variance(n: int) -> BiPoly:
    """H_n^(1)(x), which coincides with the probabilists' H*_n(x)."""
    return hermite_variance(n).subs(nu=1)
