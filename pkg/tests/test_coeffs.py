import json
from math import factorial

import pytest

from hermvar.coeffs import (
    _next_row,
    build_table_closed_form,
    build_table_recurrence,
    closed_form_coefficient,
    closed_form_entry,
    emit_matrix,
    nested_sum,
    nested_sum_extends_to_bottom,
    nested_sum_literal,
    next_row_uniform,
    odd_gap_zero,
    table_to_json,
)
from hermvar.hermite import hermite_variance
from hermvar.poly import NuPoly


def nu(c, k):
    return NuPoly.monomial(c, k)


ZERO = NuPoly()

# The printed 7x7 matrix (a_i(j, nu)), row i, column j.
REMARK = [
    [nu(1, 0), ZERO, nu(-1, 1), ZERO, nu(3, 2), ZERO, nu(-15, 3)],
    [ZERO, nu(1, 0), ZERO, nu(-3, 1), ZERO, nu(15, 2), ZERO],
    [ZERO, ZERO, nu(1, 0), ZERO, nu(-6, 1), ZERO, nu(45, 2)],
    [ZERO, ZERO, ZERO, nu(1, 0), ZERO, nu(-10, 1), ZERO],
    [ZERO, ZERO, ZERO, ZERO, nu(1, 0), ZERO, nu(-15, 1)],
    [ZERO, ZERO, ZERO, ZERO, ZERO, nu(1, 0), ZERO],
    [ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, nu(1, 0)],
]


def test_recurrence_examples():
    t = build_table_recurrence(6)
    assert t.entry(1, 3) == nu(-3, 1)
    assert t.entry(2, 4) == nu(-6, 1) and t.entry(1, 4) == ZERO
    assert t.entry(1, 5) == nu(15, 2) and t.entry(3, 5) == nu(-10, 1)
    assert t.entry(2, 6) == nu(45, 2) and t.entry(4, 6) == nu(-15, 1)


def test_seeds():
    t = build_table_recurrence(1)
    assert t.rows == ((nu(1, 0),), (ZERO, nu(1, 0)))
    assert build_table_recurrence(0).rows == ((nu(1, 0),),)


def test_matrix_matches_remark():
    assert emit_matrix(6) == REMARK
    m = emit_matrix(6)
    assert m[0][4] == nu(3, 2) and m[5][5] == nu(1, 0) and m[3][1] == ZERO


def test_closed_form_examples():
    assert closed_form_coefficient(3, 1) == nu(-3, 1)
    assert all(closed_form_coefficient(N, 0) == nu(1, 0) for N in range(10))
    assert closed_form_coefficient(6, 3) == nu(-15, 3)
    assert closed_form_coefficient(5, 2) == nu(15, 2)
    with pytest.raises(ValueError):
        closed_form_coefficient(3, 2)


def test_odd_gap_examples():
    assert odd_gap_zero(4, 1) == ZERO
    assert odd_gap_zero(2, 1) == ZERO
    assert odd_gap_zero(6, 3) == ZERO
    for bad in [(1, 0), (1, 1), (4, 3)]:
        with pytest.raises(ValueError):
            odd_gap_zero(*bad)


@pytest.mark.parametrize("N, l", [(N, l) for N in range(13) for l in range(5) if 2 * l <= N])
def test_dp_matches_literal_nesting(N, l):
    assert nested_sum(N, l) == nested_sum_literal(N, l)


@pytest.mark.parametrize("N", range(0, 21))
def test_partial_matching_count(N):
    for l in range(N // 2 + 1):
        assert nested_sum(N, l) == factorial(N) // (2**l * factorial(l) * factorial(N - 2 * l))


def test_routes_agree_to_40():
    assert build_table_recurrence(40) == build_table_closed_form(40)


def test_nested_sum_reaches_bottom_entry():
    assert nested_sum_extends_to_bottom(40)


def test_four_case_split_equals_uniform_rule():
    row = build_table_recurrence(0).rows[0]
    # the uniform rule also produces the seeds
    assert next_row_uniform(row) == build_table_recurrence(1).rows[1]
    for N in range(1, 40):
        row = build_table_recurrence(N).rows[N]
        assert _next_row(row) == next_row_uniform(row)


def test_triangle_invariants():
    t = build_table_recurrence(40)
    for N in range(41):
        assert t.entry(N, N) == nu(1, 0)
        if N >= 1:
            assert t.entry(N - 1, N) == ZERO
        if N >= 2:
            assert t.entry(N - 2, N) == nu(-N * (N - 1) // 2, 1)
        for i in range(N + 1):
            a = t.entry(i, N)
            if (N - i) % 2:
                assert a == ZERO
            else:
                l = (N - i) // 2
                (deg, c), = a.coeffs.items()
                assert deg == l and (c > 0) == (l % 2 == 0)


@pytest.mark.parametrize("N", range(0, 25))
def test_row_is_hermite_coefficients(N):
    # Theorem 2 at k = 0: sum_i a_i(N) x^i = H_N^(nu)(x)
    row = build_table_recurrence(N).rows[N]
    h = hermite_variance(N)
    for i, a in enumerate(row):
        assert a == NuPoly({dn: c for (dx, dn), c in h.terms.items() if dx == i})


def test_json_schema():
    obj = json.loads(table_to_json(build_table_recurrence(5)))
    assert obj["max_N"] == 5
    assert obj["rows"][5][1] == [[2, "15"]]
    assert obj["rows"][5][0] == []
    assert obj["rows"][0] == [[[0, "1"]]]
    assert [len(r) for r in obj["rows"]] == [1, 2, 3, 4, 5, 6]


def test_closed_form_entry_covers_triangle():
    for N in range(12):
        for i in range(N + 1):
            closed_form_entry(i, N)
    with pytest.raises(ValueError):
        closed_form_entry(5, 4)
