"""Exact sparse polynomials in the commuting indeterminates ``x`` and ``nu``.

Coefficients are :class:`fractions.Fraction`.  A :class:`BiPoly` maps exponent
pairs ``(deg_x, deg_nu)`` to nonzero coefficients; a :class:`NuPoly` is the
``deg_x == 0`` slice used for the coefficient triangle.  Both are immutable.

Text rendering uses ``v`` for ``nu``::

    >>> str(BiPoly.x() ** 3 - 3 * BiPoly.nu() * BiPoly.x())
    'x^3 - 3*x*v'
"""

from __future__ import annotations

import math
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Tuple, Union

Rational = Fraction
Exponent = Tuple[int, int]
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "BiPoly",
    "NuPoly",
    "as_rational",
    "render_rational",
    "poly_add",
    "poly_mul",
    "poly_diff_x",
    "poly_eval",
    "falling_factorial",
    "binomial",
]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"3/4"`` to a Fraction.

    Floats are refused: nothing in this package is allowed to go inexact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational coefficient")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def render_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render(terms: Mapping[Exponent, Fraction]) -> str:
    if not terms:
        return "0"
    # descending deg_x, then ascending deg_nu
    keys = sorted(terms, key=lambda e: (-e[0], e[1]))
    out = []
    for idx, (dx, dn) in enumerate(keys):
        c = terms[(dx, dn)]
        mag = abs(c)
        factors = []
        if dx:
            factors.append("x" if dx == 1 else f"x^{dx}")
        if dn:
            factors.append("v" if dn == 1 else f"v^{dn}")
        if mag != 1 or not factors:
            factors.insert(0, render_rational(mag))
        body = "*".join(factors)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class BiPoly:
    """Sparse polynomial in ``x`` and ``nu`` with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | Iterable[tuple[Exponent, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for (dx, dn), c in items:
            if dx < 0 or dn < 0:
                raise ValueError(f"negative exponent {(dx, dn)}")
            c = as_rational(c)
            key = (int(dx), int(dn))
            acc[key] = acc.get(key, Fraction(0)) + c
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, Fraction]) -> "BiPoly":
        # caller guarantees canonical form and gives up ownership of ``terms``
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls._raw({(0, 0): Fraction(1)})

    @classmethod
    def x(cls, power: int = 1) -> "BiPoly":
        return cls._raw({(power, 0): Fraction(1)})

    @classmethod
    def nu(cls, power: int = 1) -> "BiPoly":
        return cls._raw({(0, power): Fraction(1)})

    @classmethod
    def monomial(cls, c: Scalar, deg_x: int = 0, deg_nu: int = 0) -> "BiPoly":
        return cls({(deg_x, deg_nu): c})

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree_x(self) -> int | None:
        """Largest x-exponent, or ``None`` for the zero polynomial."""
        return max((e[0] for e in self._terms), default=None)

    def degree_nu(self) -> int | None:
        return max((e[1] for e in self._terms), default=None)

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return BiPoly.zero()
            return BiPoly._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for (ax, an), ac in self._terms.items():
            for (bx, bn), bc in other._terms.items():
                k = (ax + bx, an + bn)
                out[k] = out.get(k, 0) + ac * bc
        return BiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (Fraction(1) / other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = BiPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def diff_x(self) -> "BiPoly":
        return BiPoly._raw({(dx - 1, dn): c * dx for (dx, dn), c in self._terms.items() if dx})

    def subs(self, x=None, nu=None, x_scale=None) -> "BiPoly":
        """Substitute rational values for ``x`` and/or ``nu``.

        ``x_scale`` replaces ``x`` by ``x_scale * x`` instead; it cannot be
        combined with ``x``.
        """
        if x is not None and x_scale is not None:
            raise ValueError("give either x or x_scale, not both")
        xv = None if x is None else as_rational(x)
        nv = None if nu is None else as_rational(nu)
        sc = None if x_scale is None else as_rational(x_scale)
        out: dict[Exponent, Fraction] = {}
        for (dx, dn), c in self._terms.items():
            if xv is not None:
                c, dx = c * xv**dx, 0
            elif sc is not None:
                c = c * sc**dx
            if nv is not None:
                c, dn = c * nv**dn, 0
            out[(dx, dn)] = out.get((dx, dn), 0) + c
        return BiPoly._raw({k: c for k, c in out.items() if c})

    def __call__(self, x, nu) -> Fraction:
        return self.subs(x=x, nu=nu).constant_term()

    # comparison / display ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        return _render(self._terms)

    def __repr__(self):
        return f"BiPoly({_render(self._terms)!r})"

    def __reduce__(self):
        return (BiPoly, (dict(self._terms),))


def _coerce(value):
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, NuPoly):
        return value.to_bipoly()
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return BiPoly.const(value)
    return NotImplemented


class NuPoly:
    """Polynomial in ``nu`` alone; holds one entry a_i(N, nu) of the triangle."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Fraction] = {}
        for d, c in items:
            if d < 0:
                raise ValueError(f"negative nu-degree {d}")
            acc[int(d)] = acc.get(int(d), Fraction(0)) + as_rational(c)
        self._coeffs = {d: c for d, c in acc.items() if c}

    @classmethod
    def const(cls, c: Scalar) -> "NuPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Scalar, power: int) -> "NuPoly":
        return cls({power: c})

    @classmethod
    def from_bipoly(cls, p: BiPoly) -> "NuPoly":
        if any(dx for dx, _ in p.terms):
            raise ValueError(f"{p} depends on x")
        return cls({dn: c for (_, dn), c in p.terms.items()})

    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int | None:
        return max(self._coeffs, default=None)

    def to_bipoly(self) -> BiPoly:
        return BiPoly._raw({(0, d): c for d, c in self._coeffs.items()})

    def pairs(self) -> list[list]:
        """``[[nu_power, "coeff"], ...]`` ascending in ``nu_power``."""
        return [[d, render_rational(self._coeffs[d])] for d in sorted(self._coeffs)]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NuPoly.const(other)
        if not isinstance(other, NuPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, 0) + c
        return NuPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return NuPoly({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return NuPoly({d: c * other for d, c in self._coeffs.items()})
        if not isinstance(other, NuPoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for a, ac in self._coeffs.items():
            for b, bc in other._coeffs.items():
                out[a + b] = out.get(a + b, 0) + ac * bc
        return NuPoly(out)

    __rmul__ = __mul__

    def times_nu(self, k: int = 1) -> "NuPoly":
        return NuPoly({d + k: c for d, c in self._coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = NuPoly.const(other)
        if not isinstance(other, NuPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self):
        return str(self.to_bipoly())

    def __repr__(self):
        return f"NuPoly({str(self)!r})"

    def __reduce__(self):
        return (NuPoly, (dict(self._coeffs),))


def poly_add(a: BiPoly, b: BiPoly) -> BiPoly:
    return a + b


def poly_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    return a * b


def poly_diff_x(p: BiPoly) -> BiPoly:
    """Partial derivative in ``x``; ``nu`` is held constant."""
    return p.diff_x()


def poly_eval(p: BiPoly, x_val, nu_val) -> Fraction:
    return p(x_val, nu_val)


def falling_factorial(i: int, m: int) -> int:
    """``i (i-1) ... (i-m+1)``; 1 for ``m == 0`` and 0 once a factor hits zero."""
    if i < 0 or m < 0:
        raise ValueError("falling_factorial takes nonnegative arguments")
    if m > i:
        return 0
    return math.perm(i, m)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial takes nonnegative arguments")
    return math.comb(n, k)
