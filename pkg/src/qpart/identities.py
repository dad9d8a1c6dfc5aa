"""Both sides of each generating-function identity, checked coefficient-wise.

Series sides are computed with :mod:`qpart.qseries`; count sides come from
:mod:`qpart.partitions` (enumeration and DP).  Every ``verify_*`` function
returns a :class:`VerificationReport` that names the first disagreeing
coefficient, if any.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import isqrt
from typing import Optional, Sequence

from qpart import partitions as P
from qpart.qseries import (
    Monomial,
    QSeries,
    QSeriesError,
    XQSeries,
    add,
    invert,
    make_series,
    monomial,
    mul,
    one,
    poch_finite,
    poch_inf,
    poch_multi,
    sub,
    theta_sum,
    xq_mul_xq,
    xq_shift,
    zero,
)

__all__ = [
    "Mismatch",
    "VerificationReport",
    "UnsupportedSpecializationError",
    "R2_KNOWN",
    "product_side_thm13",
    "product_side_thm32",
    "sum_side_R1",
    "sum_side_R2",
    "simplified_sum_R1",
    "simplified_sum_R2",
    "theta_form_R1",
    "verify_thm13",
    "verify_thm32",
    "verify_sum_sides",
    "verify_functional_equations",
    "verify_jtp",
    "verify_CD_equality",
]

# q^0..q^10 of the generating series for two-coloured partitions (same-colour
# gap at least 2) whose parts are all >= 2
R2_KNOWN = (1, 0, 2, 2, 2, 4, 6, 8, 10, 14, 18)


class UnsupportedSpecializationError(QSeriesError):
    pass


@dataclass(frozen=True)
class Mismatch:
    index: object  # int, or (m, n) for bivariate tables
    lhs: int
    rhs: int

    def to_dict(self):
        index = list(self.index) if isinstance(self.index, tuple) else self.index
        return {"index": index, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    identity: str
    order: int
    status: str
    first_mismatch: Optional[Mismatch] = None
    x_order: Optional[int] = None
    comparison: Optional[str] = None
    nontrivial: bool = False
    elapsed_ms: float = 0.0
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if (self.status == "pass") != (self.first_mismatch is None):
            raise ValueError("status must be 'pass' exactly when no mismatch is recorded")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "order": self.order,
            "status": self.status,
            "first_mismatch": self.first_mismatch.to_dict() if self.first_mismatch else None,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.x_order is not None:
            out["m"] = self.x_order
        if self.comparison is not None:
            out["comparison"] = self.comparison
        out["nontrivial"] = self.nontrivial
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _beyond_constant(index) -> bool:
    return (index[-1] if isinstance(index, tuple) else index) > 0


def _compare(identity: str, order: int, pairs, started: float,
             x_order=None) -> VerificationReport:
    """Scan comparisons in turn and stop at the first difference.

    Each comparison is ``(label, lhs, rhs)`` or ``(label, lhs, rhs, indices)``
    where ``indices`` names the reported index of each position.
    """
    nontrivial = False
    for label, lhs, rhs, *rest in pairs:
        if len(lhs) != len(rhs):
            raise ValueError(f"{label}: compared sequences differ in length")
        indices = rest[0] if rest else range(len(lhs))
        for idx, x, y in zip(indices, lhs, rhs):
            if x != y:
                return VerificationReport(
                    identity, order, "fail", Mismatch(idx, x, y),
                    x_order=x_order, comparison=label, nontrivial=nontrivial,
                    elapsed_ms=(time.perf_counter() - started) * 1000,
                )
            if x and _beyond_constant(idx):
                nontrivial = True
    report = VerificationReport(
        identity, order, "pass", x_order=x_order, nontrivial=nontrivial,
        elapsed_ms=(time.perf_counter() - started) * 1000,
    )
    if not nontrivial:
        report.notes.append("vacuous window: no nonzero coefficient beyond q^0 compared")
    return report


# -- series sides -------------------------------------------------------------


def _overpartition_factor(order: int) -> QSeries:
    """(-q; q)_inf / (q; q)_inf, the common prefactor."""
    return mul(poch_inf(Monomial(-1, 1), 1, order),
               invert(poch_inf(Monomial(1, 1), 1, order)))


def product_side_thm13(order: int) -> QSeries:
    """(-q)_inf (q^2, q^2, q^4; q^4)_inf / (q)_inf."""
    jac = poch_multi([Monomial(1, 2), Monomial(1, 2), Monomial(1, 4)], 4, order)
    return mul(_overpartition_factor(order), jac)


def product_side_thm32(order: int) -> QSeries:
    """(-q)_inf (q, q^3, q^4; q^4)_inf / (q)_inf."""
    jac = poch_multi([Monomial(1, 1), Monomial(1, 3), Monomial(1, 4)], 4, order)
    return mul(_overpartition_factor(order), jac)


def _displayed_sum(order: int, lead_exp, tail_exp) -> QSeries:
    """Sum over n of

        (-1)^n q^lead(n) (-1;q)_n (-q^{n+1};q)_inf / ((q)_n (q^{n+1};q)_inf)
      - (-1)^n q^tail(n) (-1;q)_{n+1} (-q^{n+2};q)_inf / ((q)_n (q^{n+1};q)_inf)

    with every Pochhammer factor expanded separately.
    """
    total = zero(order)
    n = 0
    while min(lead_exp(n), tail_exp(n)) <= order:
        sign = -1 if n % 2 else 1
        denom = invert(mul(poch_finite(Monomial(1, 1), 1, n, order),
                           poch_inf(Monomial(1, n + 1), 1, order)))
        lead = mul(mul(monomial(sign, lead_exp(n), order),
                       poch_finite(Monomial(-1, 0), 1, n, order)),
                   poch_inf(Monomial(-1, n + 1), 1, order))
        tail = mul(mul(monomial(sign, tail_exp(n), order),
                       poch_finite(Monomial(-1, 0), 1, n + 1, order)),
                   poch_inf(Monomial(-1, n + 2), 1, order))
        total = add(total, mul(sub(lead, tail), denom))
        n += 1
    return total


def sum_side_R1(order: int) -> QSeries:
    return _displayed_sum(order, lambda n: n * (2 * n + 1),
                          lambda n: (n + 1) * (2 * n + 2))


def sum_side_R2(order: int) -> QSeries:
    return _displayed_sum(order, lambda n: n * (2 * n + 2),
                          lambda n: (n + 1) * (2 * n + 1))


def _add_geometric(values: list[int], coeff: int, start: int, step: int) -> None:
    """In place: values += coeff * q^start / (1 + q^step)."""
    sign = coeff
    for e in range(start, len(values), step):
        values[e] += sign
        sign = -sign


def _simplified(order: int, lead_exp, tail_extra) -> QSeries:
    # 2 * sum_n (-1)^n q^lead(n) (1/(1+q^n) - q^tail_extra(n)/(1+q^{n+1}));
    # the n = 0 lead term is 2 * 1/(1+1) = 1 exactly.
    values = [0] * (order + 1)
    values[0] = 1
    n = 0
    while lead_exp(n) <= order:
        sign = -1 if n % 2 else 1
        if n:
            _add_geometric(values, 2 * sign, lead_exp(n), n)
        _add_geometric(values, -2 * sign, lead_exp(n) + tail_extra(n), n + 1)
        n += 1
    return mul(_overpartition_factor(order), make_series(values, order))


def simplified_sum_R1(order: int) -> QSeries:
    return _simplified(order, lambda n: n * (2 * n + 1), lambda n: 3 * n + 2)


def simplified_sum_R2(order: int) -> QSeries:
    return _simplified(order, lambda n: n * (2 * n + 2), lambda n: n + 1)


def theta_form_R1(order: int) -> QSeries:
    """(-q)_inf / (q)_inf times the bilateral sum of (-1)^n q^(2n^2)."""
    return mul(_overpartition_factor(order), theta_sum(-1, 2, order))


# -- verifications --------------------------------------------------------------


def verify_thm13(order: int, enum_max: int = 30) -> VerificationReport:
    """Product side = displayed sum = simplified sum = theta form = counts."""
    started = time.perf_counter()
    product = product_side_thm13(order).coeffs
    top = min(order, enum_max)
    enumerated = [P.count_2crr(n, 1, method="enumerate") for n in range(top + 1)]
    pairs = [
        ("product vs sum_side_R1", product, sum_side_R1(order).coeffs),
        ("product vs simplified_sum_R1", product, simplified_sum_R1(order).coeffs),
        ("product vs theta_form_R1", product, theta_form_R1(order).coeffs),
        ("product vs count_2crr[dp]", product, P.count_2crr_table(order, 1)),
        ("product vs count_2crr[enumerate]", product[: top + 1], enumerated),
    ]
    return _compare("thm13", order, pairs, started)


def verify_thm32(order: int, enum_max: int = 25) -> VerificationReport:
    """Product side = no-red-1 counts = D_{2,1} counts."""
    started = time.perf_counter()
    product = product_side_thm32(order).coeffs
    top = min(order, enum_max)
    pairs = [
        ("product vs count_2crr_no_red1[dp]", product, P.count_2crr_no_red1_table(order)),
        ("product vs count_2crr_no_red1[enumerate]", product[: top + 1],
         [P.count_2crr_no_red1(n, method="enumerate") for n in range(top + 1)]),
        ("product vs count_D(2,1)", product[: top + 1],
         [P.count_D(2, 1, n) for n in range(top + 1)]),
    ]
    return _compare("thm32", order, pairs, started)


def verify_sum_sides(order: int) -> VerificationReport:
    """Displayed and simplified sums agree, and R_2(1) counts parts >= 2."""
    started = time.perf_counter()
    r2 = sum_side_R2(order).coeffs
    known = min(order + 1, len(R2_KNOWN))
    pairs = [
        ("sum_side_R1 vs simplified_sum_R1", sum_side_R1(order).coeffs,
         simplified_sum_R1(order).coeffs),
        ("sum_side_R2 vs simplified_sum_R2", r2, simplified_sum_R2(order).coeffs),
        ("sum_side_R2 vs count_2crr(n,2)", r2, P.count_2crr_table(order, 2)),
        ("sum_side_R2 vs known values", r2[:known], R2_KNOWN[:known]),
    ]
    return _compare("sumsides", order, pairs, started)


def verify_functional_equations(x_order: int, order: int,
                                r1: Optional[XQSeries] = None,
                                r2: Optional[XQSeries] = None) -> VerificationReport:
    """R_2(x) = R_1(xq) and R_1(x) - R_2(x) = xq R_1(xq) + xq R_2(xq).

    Tables default to enumeration-built refined counts; pass ``r1``/``r2``
    to check other tables.  Only entries with n <= order - x_order are
    compared.
    """
    started = time.perf_counter()
    if x_order < 1 or order < x_order:
        raise ValueError("need 1 <= x_order <= order")
    if r1 is None:
        r1 = P.build_xq_table(1, x_order, order)
    if r2 is None:
        r2 = P.build_xq_table(2, x_order, order)
    limit = order - x_order
    shifted = xq_shift(r1)
    lhs = r1 - r2
    rhs = xq_mul_xq(shifted) + xq_mul_xq(xq_shift(r2))

    cells = [(m, n) for m in range(x_order + 1) for n in range(limit + 1)]
    inner = [(m, n) for m, n in cells if m >= 1]
    pairs = [
        ("R2(x) vs R1(xq)", [r2[c] for c in cells], [shifted[c] for c in cells], cells),
        ("R1(x)-R2(x) vs xqR1(xq)+xqR2(xq)", [lhs[c] for c in cells],
         [rhs[c] for c in cells], cells),
        ("r1(m,n)-r2(m,n) vs r1(m-1,n-m)+r2(m-1,n-m)",
         [r1[m, n] - r2[m, n] for m, n in inner],
         [r1[m - 1, n - m] + r2[m - 1, n - m] if n >= m else 0 for m, n in inner],
         inner),
    ]
    return _compare("funceq", order, pairs, started, x_order=x_order)


def jtp_sum_side(sign: int, k_shift: int, order: int, base: int = 2) -> QSeries:
    """Sum over all integers n of sign^n q^(base n^2 + k_shift n)."""
    _check_jtp(sign, k_shift, base)
    values = [0] * (order + 1)
    bound = isqrt(order) + abs(k_shift) + 2
    for n in range(-bound, bound + 1):
        e = base * n * n + k_shift * n
        if e <= order:
            values[e] += sign ** abs(n)
    return make_series(values, order)


def jtp_product_side(sign: int, k_shift: int, order: int, base: int = 2) -> QSeries:
    """prod (1 - q^{2b(n+1)})(1 + z q^{b(2n+1)})(1 + z^-1 q^{b(2n+1)}), z = sign q^k."""
    _check_jtp(sign, k_shift, base)
    low = base - abs(k_shift)
    if low == 0 and sign == -1:
        # the factor 1 + z^{-1} q^b is 1 - 1 = 0
        return zero(order)
    factors = [
        poch_inf(Monomial(1, 2 * base), 2 * base, order),
        poch_inf(Monomial(-sign, base + abs(k_shift)), 2 * base, order),
        poch_inf(Monomial(-sign, low), 2 * base, order),
    ]
    out = one(order)
    for f in factors:
        out = mul(out, f)
    return out


def _check_jtp(sign: int, k_shift: int, base: int) -> None:
    if sign not in (1, -1):
        raise UnsupportedSpecializationError(f"sign must be +1 or -1, got {sign}")
    if base < 1:
        raise UnsupportedSpecializationError(f"base must be >= 1, got {base}")
    if abs(k_shift) > base:
        raise UnsupportedSpecializationError(
            f"|k_shift| = {abs(k_shift)} > base {base} produces negative exponents"
        )


def verify_jtp(sign: int, k_shift: int, order: int, base: int = 2) -> VerificationReport:
    """Jacobi triple product with z = sign * q^k_shift, in the variable q^base.

    The default ``base=2`` is the specialization used for the theta form
    of R_1(1).  With ``base == |k_shift|`` and ``sign == -1`` both sides
    vanish identically and the report is flagged vacuous.
    """
    started = time.perf_counter()
    lhs = jtp_sum_side(sign, k_shift, order, base)
    rhs = jtp_product_side(sign, k_shift, order, base)
    label = f"sign={sign:+d} k_shift={k_shift} base={base}"
    report = _compare("jtp", order, [(label, lhs.coeffs, rhs.coeffs)], started)
    report.comparison = label
    if base == abs(k_shift) and sign == -1:
        report.notes.append("degenerate specialization: both sides vanish identically")
    return report


def verify_CD_equality(k: int, i: int, n_max: int) -> VerificationReport:
    """C_{k,i}(n) = D_{k,i}(n) for n <= n_max, plus the k = 2 bridges."""
    started = time.perf_counter()
    c_counts = P.count_C_table(k, i, n_max)
    d_counts = [P.count_D(k, i, n) for n in range(n_max + 1)]
    pairs = [(f"C({k},{i}) vs D({k},{i})", c_counts, d_counts)]
    if (k, i) == (2, 2):
        pairs.append(("D(2,2) vs count_2crr(n,1)", d_counts, P.count_2crr_table(n_max, 1)))
    elif (k, i) == (2, 1):
        pairs.append(("D(2,1) vs count_2crr_no_red1", d_counts,
                      P.count_2crr_no_red1_table(n_max)))
    return _compare("cd-equal", n_max, pairs, started)


def reports_passed(reports: Sequence[VerificationReport]) -> bool:
    return all(r.passed for r in reports)
