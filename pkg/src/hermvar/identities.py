"""Exact verifiers for the Hermite identities.

Every verifier compares two independently assembled sides with exact
equality and returns a :class:`VerificationReport`; single-point verifiers
cover one parameter tuple and the ``suite_*`` functions sweep a grid and
merge the results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from .coeffs import (
    build_table_recurrence,
    closed_form_entry,
    nested_sum_extends_to_bottom,
)
from .hermite import (
    apply_appell_operator,
    convert_physicists_to_probabilists,
    convert_probabilists_to_physicists,
    hermite_physicists,
    hermite_probabilists,
    hermite_variance,
    identify_physicists_as_variance,
    identify_probabilists_as_variance,
)
from .poly import BiPoly, binomial, falling_factorial
from .series import (
    TruncSeries,
    generating_function,
    series_diff_t,
    series_mul,
)

__all__ = [
    "Failure",
    "VerificationReport",
    "DEFAULT_BOUNDS",
    "SUITES",
    "theorem2_rhs",
    "theorem1_rhs",
    "verify_theorem1",
    "verify_theorem2",
    "verify_theorem3",
    "verify_operator_form",
    "verify_monomial_expansion",
    "verify_conversion",
    "verify_ode",
    "verify_oracle",
    "run_suite",
]

_X = BiPoly.x()
_NU = BiPoly.nu()

DEFAULT_BOUNDS = {"max_k": 12, "max_N": 12, "max_m": 10, "max_n": 20, "truncation": 24, "thm3_max_N": 40}


@dataclass(frozen=True)
class Failure:
    params: dict
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"params": dict(self.params), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    identity_name: str
    parameter_range: str
    failures: list[Failure] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, params: dict, lhs: Any, rhs: Any) -> bool:
        self.checked += 1
        if lhs == rhs:
            return True
        self.failures.append(Failure(dict(params), str(lhs), str(rhs)))
        return False

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_name,
            "grid": self.parameter_range,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
        }

    def render(self, full: bool = False, limit: int = 5) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.identity_name} [{self.parameter_range}] checks={self.checked}"]
        shown = self.failures if full else self.failures[:limit]
        for f in shown:
            params = ", ".join(f"{k}={v}" for k, v in f.params.items())
            lines.append(f"  at {params}:")
            lines.append(f"    lhs: {f.lhs}")
            lines.append(f"    rhs: {f.rhs}")
        hidden = len(self.failures) - len(shown)
        if hidden:
            lines.append(f"  ... {hidden} more failure(s); rerun with --full for all")
        return "\n".join(lines)


def _failure_key(f: Failure):
    return [(k, (0, v) if isinstance(v, int) else (1, str(v))) for k, v in sorted(f.params.items())]


def _merge(name: str, grid: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    out = VerificationReport(name, grid)
    for r in reports:
        out.checked += r.checked
        out.failures.extend(r.failures)
    out.failures.sort(key=_failure_key)
    return out


# --- Theorem 1 ------------------------------------------------------------

def theorem1_rhs(N: int, order: int) -> TruncSeries:
    """``(sum_i a_i(N, nu) (x - nu t)^i) F`` truncated at ``order``."""
    row = build_table_recurrence(N).rows[N]
    shift = TruncSeries([_X, -_NU], order=order)
    power = TruncSeries([BiPoly.one()], order=order)
    mult = TruncSeries([], order=order)
    for i, a in enumerate(row):
        if i:
            power = series_mul(power, shift)
        if a:
            mult = mult + power * a.to_bipoly()
    return series_mul(mult, generating_function(order))


def verify_theorem1(N: int, T: int) -> VerificationReport:
    if T < N + 2:
        raise ValueError(f"truncation T={T} must be at least N+2={N + 2}")
    report = VerificationReport("theorem1", f"N={N}, T={T}")
    lhs = generating_function(T)
    for _ in range(N):
        lhs = series_diff_t(lhs)
    rhs = theorem1_rhs(N, T - N)
    for k in range(T - N + 1):
        report.check({"N": N, "T": T, "t_power": k}, lhs.coeffs[k], rhs.coeffs[k])
    return report


# --- Theorem 2 / operator form ---------------------------------------------

def theorem2_rhs(k: int, N: int) -> BiPoly:
    """sum_i a_i(N) sum_{l>=max(0,k-i)}^k C(k,l) (i)_{k-l} (-nu)^{k-l} x^{i+l-k} H_l."""
    row = build_table_recurrence(N).rows[N]
    total = BiPoly.zero()
    for i, a in enumerate(row):
        if not a:
            continue
        inner = BiPoly.zero()
        for l in range(max(0, k - i), k + 1):
            xdeg = i + l - k
            assert xdeg >= 0, (k, N, i, l)
            c = binomial(k, l) * falling_factorial(i, k - l) * (-1) ** (k - l)
            if c:
                inner = inner + BiPoly.monomial(c, xdeg, k - l) * hermite_variance(l)
        total = total + a.to_bipoly() * inner
    return total


def verify_theorem2(k: int, N: int) -> VerificationReport:
    report = VerificationReport("theorem2", f"k={k}, N={N}")
    report.check({"k": k, "N": N}, hermite_variance(k + N), theorem2_rhs(k, N))
    return report


def _raise(p: BiPoly, N: int) -> BiPoly:
    for _ in range(N):
        p = apply_appell_operator(p)
    return p


def verify_operator_form(k: int, N: int) -> VerificationReport:
    report = VerificationReport("operator", f"k={k}, N={N}")
    op = _raise(hermite_variance(k), N)
    report.check({"k": k, "N": N, "against": "H_{k+N}"}, op, hermite_variance(k + N))
    report.check({"k": k, "N": N, "against": "theorem2"}, op, theorem2_rhs(k, N))
    return report


# --- Theorem 3 ------------------------------------------------------------

def verify_theorem3(max_N: int) -> VerificationReport:
    """Recurrence triangle against the closed-form nested sums, cell by cell."""
    report = VerificationReport("theorem3", f"0<=i<=N<={max_N}")
    table = build_table_recurrence(max_N)
    for N in range(max_N + 1):
        for i in range(N + 1):
            report.check({"N": N, "i": i}, table.entry(i, N), closed_form_entry(i, N))
    report.check({"max_N": max_N, "property": "nested_sum_extends_to_bottom"},
                 nested_sum_extends_to_bottom(max_N), True)
    return report


# --- monomial expansions --------------------------------------------------

def _monomial_rhs(m: int, odd: bool) -> BiPoly:
    total = BiPoly.zero()
    half_nu = Fraction(1, 2)
    for l in range(m + 1):
        top, idx = (2 * m + 1, 2 * l + 1) if odd else (2 * m, 2 * l)
        c = binomial(top, idx) * Fraction(math.factorial(2 * m - 2 * l), math.factorial(m - l))
        c *= half_nu ** (m - l)
        total = total + BiPoly.monomial(c, 0, m - l) * hermite_variance(idx)
    return total


def verify_monomial_expansion(m: int) -> VerificationReport:
    report = VerificationReport("monomial", f"m={m}")
    report.check({"m": m, "case": "odd"}, BiPoly.x(2 * m + 1), _monomial_rhs(m, True))
    report.check({"m": m, "case": "even"}, BiPoly.x(2 * m), _monomial_rhs(m, False))
    return report


# --- conversions ----------------------------------------------------------

def verify_conversion(n: int) -> VerificationReport:
    report = VerificationReport("conversion", f"n={n}")
    phys = hermite_physicists(n)
    prob = hermite_probabilists(n)
    report.check({"n": n, "map": "prob->phys"}, convert_probabilists_to_physicists(n), phys)
    report.check({"n": n, "map": "phys->prob"}, convert_physicists_to_probabilists(n), prob)
    report.check({"n": n, "map": "variance(nu=2, 2x)"}, identify_physicists_as_variance(n), phys)
    report.check({"n": n, "map": "variance(nu=1)"}, identify_probabilists_as_variance(n), prob)
    return report


# --- differential equation and Appell invariants ---------------------------

def _ode_residual(u: BiPoly, n: int, nu) -> BiPoly:
    du = u.diff_x()
    return nu * du.diff_x() - _X * du + n * u


def verify_ode(n: int) -> VerificationReport:
    report = VerificationReport("ode", f"n={n}")
    zero = BiPoly.zero()
    report.check({"n": n, "family": "variance"}, _ode_residual(hermite_variance(n), n, _NU), zero)
    report.check({"n": n, "family": "probabilists"}, _ode_residual(hermite_probabilists(n), n, 1), zero)
    h = hermite_variance(n)
    if n >= 1:
        report.check({"n": n, "property": "appell"}, h.diff_x(), n * hermite_variance(n - 1))
        report.check(
            {"n": n, "property": "three-term"},
            hermite_variance(n + 1),
            _X * h - n * _NU * hermite_variance(n - 1),
        )
    bad = [dx for dx, _ in h.terms if (dx - n) % 2]
    report.check({"n": n, "property": "parity"}, bad, [])
    return report


def verify_oracle(n: int, T: int) -> VerificationReport:
    if n > T:
        raise ValueError(f"n={n} exceeds truncation T={T}")
    report = VerificationReport("oracle", f"n={n}, T={T}")
    oracle = math.factorial(n) * generating_function(T).coeffs[n]
    report.check({"n": n, "T": T}, hermite_variance(n), oracle)
    return report


# --- suites ---------------------------------------------------------------

def suite_thm1(b: dict) -> VerificationReport:
    T, max_N = b["truncation"], b["max_N"]
    return _merge("theorem1", f"0<=N<={max_N}, T={T}", (verify_theorem1(N, T) for N in range(max_N + 1)))


def suite_thm2(b: dict) -> VerificationReport:
    max_k, max_N = b["max_k"], b["max_N"]
    return _merge(
        "theorem2",
        f"0<=k<={max_k}, 0<=N<={max_N}",
        (verify_theorem2(k, N) for k in range(max_k + 1) for N in range(max_N + 1)),
    )


def suite_thm3(b: dict) -> VerificationReport:
    return verify_theorem3(b["thm3_max_N"])


def suite_operator(b: dict) -> VerificationReport:
    max_k, max_N = b["max_k"], b["max_N"]
    return _merge(
        "operator",
        f"0<=k<={max_k}, 0<=N<={max_N}",
        (verify_operator_form(k, N) for k in range(max_k + 1) for N in range(max_N + 1)),
    )


def suite_monomial(b: dict) -> VerificationReport:
    m = b["max_m"]
    return _merge("monomial", f"0<=m<={m}", (verify_monomial_expansion(i) for i in range(m + 1)))


def suite_conversion(b: dict) -> VerificationReport:
    n = b["max_n"]
    return _merge("conversion", f"0<=n<={n}", (verify_conversion(i) for i in range(n + 1)))


def suite_ode(b: dict) -> VerificationReport:
    n = b["max_n"]
    return _merge("ode", f"0<=n<={n}", (verify_ode(i) for i in range(n + 1)))


def suite_oracle(b: dict) -> VerificationReport:
    n, T = b["max_n"], b["truncation"]
    return _merge("oracle", f"0<=n<={n}, T={T}", (verify_oracle(i, T) for i in range(n + 1)))


SUITES: dict[str, Callable[[dict], VerificationReport]] = {
    "thm1": suite_thm1,
    "thm2": suite_thm2,
    "thm3": suite_thm3,
    "operator": suite_operator,
    "monomial": suite_monomial,
    "conversion": suite_conversion,
    "ode": suite_ode,
    "oracle": suite_oracle,
}


def check_bounds(suite: str, bounds: dict) -> None:
    """Reject bound combinations a suite cannot run with, before any work."""
    names = list(SUITES) if suite == "all" else [suite]
    for key, value in bounds.items():
        if value < 0:
            raise ValueError(f"{key} must be nonnegative, got {value}")
    if "thm1" in names and bounds["truncation"] < bounds["max_N"] + 2:
        raise ValueError(
            f"thm1 needs truncation >= max_N + 2 (got T={bounds['truncation']}, max_N={bounds['max_N']})"
        )
    if "oracle" in names and bounds["max_n"] > bounds["truncation"]:
        raise ValueError(
            f"oracle needs max_n <= truncation (got max_n={bounds['max_n']}, T={bounds['truncation']})"
        )


def run_suite(suite: str, bounds: dict | None = None) -> list[VerificationReport]:
    b = dict(DEFAULT_BOUNDS)
    b.update(bounds or {})
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    check_bounds(suite, b)
    names = list(SUITES) if suite == "all" else [suite]
    return [SUITES[name](b) for name in names]
