"""The triangle a_i(N, nu) with F^(N) = (sum_i a_i(N, nu) (x - nu t)^i) F.

Two independent routes:

* :func:`build_table_recurrence` grows the triangle row by row from the
  seeds a_0(0) = 1, a_0(1) = 0, a_1(1) = 1 using the four-case split
  (bottom entry, interior, next-to-top, top).
* :func:`closed_form_coefficient` evaluates the nested sum

      a_{N-2l}(N, nu) = (-nu)^l  sum_{i_l=1}^{N-2l+1} sum_{i_{l-1}=1}^{i_l+1}
                                 ... sum_{i_1=1}^{i_2+1} i_l i_{l-1} ... i_1

  by dynamic programming, and :func:`odd_gap_zero` covers a_{N-(2l-1)} = 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .poly import NuPoly

__all__ = [
    "CoeffTable",
    "build_table_recurrence",
    "next_row_uniform",
    "nested_sum",
    "nested_sum_literal",
    "closed_form_coefficient",
    "odd_gap_zero",
    "closed_form_entry",
    "build_table_closed_form",
    "nested_sum_extends_to_bottom",
    "emit_matrix",
    "table_to_json",
]

_ONE = NuPoly.const(1)
_ZERO = NuPoly()


@dataclass(frozen=True)
class CoeffTable:
    """Row ``N`` holds ``(a_0(N), ..., a_N(N))``."""

    rows: tuple[tuple[NuPoly, ...], ...]

    @property
    def max_N(self) -> int:
        return len(self.rows) - 1

    def entry(self, i: int, N: int) -> NuPoly:
        if not 0 <= N <= self.max_N:
            raise IndexError(f"row {N} is outside 0..{self.max_N}")
        if not 0 <= i <= N:
            raise IndexError(f"a_{i}({N}) is outside the triangle")
        return self.rows[N][i]

    def to_json_obj(self) -> dict:
        return {"max_N": self.max_N, "rows": [[e.pairs() for e in row] for row in self.rows]}


def _next_row(row: tuple[NuPoly, ...]) -> tuple[NuPoly, ...]:
    N = len(row) - 1
    new = [None] * (N + 2)
    new[0] = -row[1].times_nu()
    for i in range(1, N):
        new[i] = row[i - 1] - (i + 1) * row[i + 1].times_nu()
    new[N] = row[N - 1]
    new[N + 1] = row[N]
    return tuple(new)


def next_row_uniform(row: tuple[NuPoly, ...]) -> tuple[NuPoly, ...]:
    """Single-rule step: a_i(N+1) = -(i+1) nu a_{i+1}(N) + a_{i-1}(N), zero-padded."""
    N = len(row) - 1

    def a(i):
        return row[i] if 0 <= i <= N else _ZERO

    return tuple(a(i - 1) - (i + 1) * a(i + 1).times_nu() for i in range(N + 2))


@lru_cache(maxsize=8)
def build_table_recurrence(max_N: int) -> CoeffTable:
    if max_N < 0:
        raise ValueError("max_N must be nonnegative")
    rows = [(_ONE,), (_ZERO, _ONE)]
    while len(rows) <= max_N:
        rows.append(_next_row(rows[-1]))
    return CoeffTable(tuple(rows[: max_N + 1]))


@lru_cache(maxsize=None)
def _prefix(r: int, j: int) -> int:
    # S_1(j) = sum_{i<=j} i ;  S_r(j) = sum_{i<=j} i * S_{r-1}(i+1)
    if j <= 0:
        return 0
    if r == 1:
        return j * (j + 1) // 2
    return _prefix(r, j - 1) + j * _prefix(r - 1, j + 1)


def nested_sum(N: int, l: int) -> int:
    """Value of the l-fold nested sum for a_{N-2l}(N), by prefix-sum DP."""
    if l == 0:
        return 1
    # fill bottom-up so the memo never recurses deeply
    top = N - 2 * l + 1
    for r in range(1, l + 1):
        for j in range(0, top + (l - r) + 1):
            _prefix(r, j)
    return _prefix(l, top)


def nested_sum_literal(N: int, l: int) -> int:
    """The nested sum written out as nested loops; exponential, test use only."""
    if l == 0:
        return 1

    def inner(depth: int, upper: int) -> int:
        if depth == 0:
            return 1
        return sum(i * inner(depth - 1, i + 1) for i in range(1, upper + 1))

    return inner(l, N - 2 * l + 1)


def closed_form_coefficient(N: int, l: int) -> NuPoly:
    """a_{N-2l}(N, nu) = (-nu)^l * nested_sum(N, l)."""
    if l < 0 or 2 * l > N:
        raise ValueError(f"need 0 <= 2l <= N, got N={N}, l={l}")
    return NuPoly.monomial((-1) ** l * nested_sum(N, l), l)


def odd_gap_zero(N: int, l: int) -> NuPoly:
    """a_{N-(2l-1)}(N, nu), identically zero for 1 <= l <= N // 2."""
    if not 1 <= l <= N // 2:
        raise ValueError(f"need 1 <= l <= {N // 2}, got l={l}")
    return NuPoly()


def closed_form_entry(i: int, N: int) -> NuPoly:
    gap = N - i
    if gap < 0 or i < 0:
        raise ValueError(f"a_{i}({N}) is outside the triangle")
    if gap % 2:
        l = (gap + 1) // 2
        if l <= N // 2:
            return odd_gap_zero(N, l)
        # a_0(N) for odd N sits one step past the stated range of l; it is
        # -nu a_1(N-1), an odd-gap entry of the even row below, hence zero
        return NuPoly()
    return closed_form_coefficient(N, gap // 2)


def build_table_closed_form(max_N: int) -> CoeffTable:
    return CoeffTable(
        tuple(tuple(closed_form_entry(i, N) for i in range(N + 1)) for N in range(max_N + 1))
    )


def nested_sum_extends_to_bottom(max_N: int) -> bool:
    """Whether the nested sum also yields a_0(N) for even N (l = N/2).

    The stated range 1 <= l <= (N-1)//2 stops short of that cell; this checks
    it against the recurrence value a_0(N) = -nu a_1(N-1).
    """
    table = build_table_recurrence(max_N)
    return all(
        closed_form_coefficient(N, N // 2) == table.entry(0, N)
        for N in range(2, max_N + 1, 2)
    )


def emit_matrix(max_index: int) -> list[list[NuPoly]]:
    """Square view: entry ``[i][j]`` is a_i(j, nu), zero below the diagonal."""
    table = build_table_recurrence(max_index)
    return [
        [table.entry(i, j) if i <= j else _ZERO for j in range(max_index + 1)]
        for i in range(max_index + 1)
    ]


def table_to_json(table: CoeffTable) -> str:
    return json.dumps(table.to_json_obj(), separators=(",", ":"))
