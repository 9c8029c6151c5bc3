"""One named coefficientwise check per display in the identity chain.

Each check builds both sides of one identity from the lower modules and
compares them to a requested order, returning a :class:`CheckReport`.
Checks are deliberately kept separate even where they are mathematically
redundant: when a code change breaks something, the earliest failing
check localizes the broken step.

The chain being verified, in catalog order (ASCII notation, (a)_n short
for (a; q)_n):

  eq_1_1          sum a(n) q^n = sum_{m>=1} q^m/(1-q^m) (-q)_{m-1}
  sigma_sums      sum_{D} sigma q^|pi| = sum m q^m (-q^{m+1})_inf
                  sum_{D} (-1)^# sigma q^|pi| = -sum m q^m (q^{m+1})_inf
  eq_2_1          2 sum b(n) q^n = (q)_inf S+ + (-q)_inf S-   where
                  S+- = sum_{m>=1} m q^m / (+-q)_m
  euler_sum       sum_{m>=0} z^m/(q)_m = 1/(z)_inf
  logderiv        z d/dz 1/(z)_inf = (z/(z)_inf) sum_{m>=0} q^m/(1-z q^m)
  eq_2_2          (q)_inf S+ = sum_{m>=1} q^m/(1-q^m)
  heine_instance  2phi1(0,q; -q; q,z)
                  = [(q)_inf/(-q)_inf] [1/(z)_inf] 2phi1(-1,z; 0; q,q)
  finite_identity (-q)_{m-1} = 1 + sum_{n=1..m-1} (-q)_{n-1} q^n
                  and sum_{n=0..m-1} (-1)_n q^n = 2(-q)_{m-1} - 1
  eq_2_3          (-q)_inf S- = sum_{m>=1} q^m/(1-q^m) (2(-q)_{m-1} - 1)
  theorem_1       a(n) = b(n): the doubled half-sum assembly, plus the
                  direct enumeration of b(n)

a(n) counts gap-free partitions of n; b(n) sums smallest parts over
distinct partitions of n with an odd number of parts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .series import (
    Mismatch,
    QSeries,
    first_mismatch,
    geometric,
    inv_one_minus,
    monomial,
    one,
    zero,
)
from .biseries import (
    BiMismatch,
    BiSeries,
    bi_first_mismatch,
    bi_geometric_z,
    bi_monomial,
    bi_zero,
    from_qseries,
    one_minus_z_q,
    poch_z_inf,
    substitute_z_eq_q,
    z_dz,
)
from .qspecial import (
    MINUS_ONE,
    MINUS_Q,
    Q,
    Z,
    ZERO,
    HypergeometricSpec,
    phi,
    poch_finite,
    poch_inf,
)
from . import partitions as pt

DEFAULT_ORDER = 200
DEFAULT_ZDEG = 16
DEFAULT_QORDER = 32
DEFAULT_ORACLE_ORDER = 40
DEFAULT_THEOREM_ORACLE_ORDER = 50
DEFAULT_M_MAX = 30


@dataclass
class CheckReport:
    """Outcome of one identity check."""

    name: str
    passed: bool
    order: int
    zdeg: int | None = None
    mismatch: Mismatch | BiMismatch | None = None
    detail: str = ""
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        d: dict = {"name": self.name, "passed": self.passed, "order": self.order}
        if self.zdeg is not None:
            d["zdeg"] = self.zdeg
        if self.mismatch is not None:
            e = self.mismatch.exponent
            d["mismatch"] = {
                "exponent": list(e) if isinstance(e, tuple) else e,
                "lhs": self.mismatch.lhs,
                "rhs": self.mismatch.rhs,
            }
            if self.detail:
                d["mismatch"]["where"] = self.detail
        return d

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        dims = f"order={self.order}" + (f" zdeg={self.zdeg}" if self.zdeg is not None else "")
        msg = f"{status} {self.name:<22s} {dims} ({self.elapsed:.2f}s)"
        if self.mismatch is not None:
            m = self.mismatch
            where = f" in {self.detail}" if self.detail else ""
            msg += f"  first mismatch{where} at {m.exponent}: lhs={m.lhs} rhs={m.rhs}"
        return msg


def _legs_report(
    name: str,
    legs: Iterable[tuple[str, Mismatch | BiMismatch | None]],
    order: int,
    zdeg: int | None,
    t0: float,
) -> CheckReport:
    for label, mm in legs:
        if mm is not None:
            return CheckReport(
                name, False, order, zdeg, mm, label, time.perf_counter() - t0
            )
    return CheckReport(name, True, order, zdeg, None, "", time.perf_counter() - t0)


# -- generating functions ----------------------------------------------------


def genfun_a(order: int) -> QSeries:
    """sum_{m>=1} q^m/(1-q^m) * (-q; q)_{m-1}, truncated.

    The running Pochhammer is extended by one sparse factor per m, so the
    whole sum costs about order^2 log(order) coefficient operations.
    """
    acc = zero(order)
    poch = one(order)  # (-q)_{m-1}, starting from the empty product
    for m in range(1, order):
        acc = acc + geometric(m, order) * poch
        if m < order - 1:
            poch = poch * QSeries(
                [1] + [0] * (m - 1) + [1], order
            )  # multiply by (1 + q^m)
    return acc


def genfun_b_oracle(order: int, cap: int = pt.DEFAULT_DISTINCT_CAP) -> QSeries:
    """b(n) for n < order, by direct enumeration of distinct partitions."""
    if order - 1 > cap:
        raise ValueError(
            f"order {order} exceeds the distinct-enumeration cap {cap}"
        )
    return QSeries([0] + [pt.b_direct(n, cap) for n in range(1, order)], max(order, 1))


def genfun_a_oracle(order: int, cap: int = pt.DEFAULT_CAP) -> QSeries:
    """a(n) for n < order, by exhaustive enumeration."""
    if order - 1 > cap:
        raise ValueError(f"order {order} exceeds the enumeration cap {cap}")
    return QSeries([0] + [pt.a_direct(n, cap) for n in range(1, order)], max(order, 1))


def divisor_sum_series(order: int) -> QSeries:
    """sum_{m>=1} q^m/(1-q^m); the coefficient of q^n is d(n)."""
    acc = [0] * order
    for m in range(1, order):
        for e in range(m, order, m):
            acc[e] += 1
    return QSeries(acc, order)


def weighted_inv_poch_sum(order: int, sign: int) -> QSeries:
    """sum_{m>=1} m q^m / (sign*q; q)_m, truncated.

    sign=+1 gives S+ = sum m q^m/(q)_m, sign=-1 gives S- with (-q)_m.
    The inverse Pochhammer is grown one sparse factor at a time.
    """
    acc = [0] * order
    ip = one(order)  # 1/(sign*q; q)_m so far
    for m in range(1, order):
        ip = ip * inv_one_minus(sign, m, order)
        cs = ip.coeffs
        for e in range(order - m):
            c = cs[e]
            if c:
                acc[e + m] += m * c
    return QSeries(acc, order)


def sigma_sum_series(order: int, signed: bool = False) -> QSeries:
    """Smallest-part sums over distinct partitions, as a product-form series.

    Unsigned: sum_{m>=1} m q^m (-q^{m+1}; q)_inf.
    Signed:  -sum_{m>=1} m q^m (q^{m+1}; q)_inf (the (-1)^#parts weighting).

    Built by descending m so each (q^{m+1})_inf-style tail is one sparse
    factor away from the previous one.
    """
    acc = [0] * order
    tail = one(order)  # (-+q^{m+1}; q)_inf for the current m, = 1 at m = order-1
    for m in range(order - 1, 0, -1):
        cs = tail.coeffs
        w = -m if signed else m
        for e in range(order - m):
            c = cs[e]
            if c:
                acc[e + m] += w * c
        if m > 1:
            f = [0] * order
            f[0] = 1
            f[m] = -1 if signed else 1  # (1 -+ q^m)
            tail = tail * QSeries(f, order)
    return QSeries(acc, order)


def sigma_sum_oracle(order: int, signed: bool = False) -> QSeries:
    """The same sums by brute-force enumeration of distinct partitions."""
    acc = [0] * order
    for w in range(1, order):
        for p in pt.distinct_partitions(w):
            s = p[-1]
            if signed and len(p) % 2:
                s = -s
            acc[w] += s
    return QSeries(acc, order)


# -- the checks --------------------------------------------------------------


def check_eq_1_1(
    order: int = DEFAULT_ORACLE_ORDER, cap: int = pt.DEFAULT_CAP
) -> CheckReport:
    """Generating function of a(n) against the gap-free enumeration oracle."""
    t0 = time.perf_counter()
    lhs = genfun_a_oracle(order, cap)
    rhs = genfun_a(order)
    return _legs_report(
        "eq_1_1", [("enumeration vs series", first_mismatch(lhs, rhs, order))],
        order, None, t0,
    )


def check_sigma_sums(
    order: int = DEFAULT_ORACLE_ORDER,
) -> tuple[CheckReport, CheckReport]:
    return check_sigma_sums_unsigned(order), check_sigma_sums_signed(order)


def check_sigma_sums_unsigned(order: int = DEFAULT_ORACLE_ORDER) -> CheckReport:
    t0 = time.perf_counter()
    lhs = sigma_sum_oracle(order, signed=False)
    rhs = sigma_sum_series(order, signed=False)
    return _legs_report(
        "sigma_sums_unsigned",
        [("enumeration vs series", first_mismatch(lhs, rhs, order))],
        order, None, t0,
    )


def check_sigma_sums_signed(order: int = DEFAULT_ORACLE_ORDER) -> CheckReport:
    t0 = time.perf_counter()
    lhs = sigma_sum_oracle(order, signed=True)
    rhs = sigma_sum_series(order, signed=True)
    return _legs_report(
        "sigma_sums_signed",
        [("enumeration vs series", first_mismatch(lhs, rhs, order))],
        order, None, t0,
    )


def check_eq_2_1(
    order: int = DEFAULT_ORACLE_ORDER, cap: int = pt.DEFAULT_DISTINCT_CAP
) -> CheckReport:
    """2 sum b(n) q^n against (q)_inf S+ + (-q)_inf S-.

    Doubling the enumeration side keeps the arithmetic in integers; the
    halving in the written identity never materializes.
    """
    t0 = time.perf_counter()
    lhs = genfun_b_oracle(order, cap).scale(2)
    rhs = poch_inf(Q, order) * weighted_inv_poch_sum(order, +1) + poch_inf(
        MINUS_Q, order
    ) * weighted_inv_poch_sum(order, -1)
    return _legs_report(
        "eq_2_1", [("2*oracle vs half-sum", first_mismatch(lhs, rhs, order))],
        order, None, t0,
    )


def euler_sum_direct(zdeg: int, qorder: int) -> BiSeries:
    """sum_{m=0..zdeg} z^m / (q; q)_m, one explicit row per z-power."""
    rows = [one(qorder).coeffs]
    ip = one(qorder)
    for m in range(1, zdeg + 1):
        ip = ip * inv_one_minus(1, m, qorder)
        rows.append(ip.coeffs)
    return BiSeries(rows, zdeg, qorder)


def check_euler_sum(
    zdeg: int = DEFAULT_ZDEG, qorder: int = DEFAULT_QORDER
) -> CheckReport:
    t0 = time.perf_counter()
    lhs = euler_sum_direct(zdeg, qorder)
    rhs = poch_z_inf(zdeg, qorder).inverse()
    return _legs_report(
        "euler_sum",
        [("direct sum vs 1/(z)_inf", bi_first_mismatch(lhs, rhs, zdeg, qorder))],
        qorder, zdeg, t0,
    )


def check_logderiv(
    zdeg: int = DEFAULT_ZDEG, qorder: int = DEFAULT_QORDER
) -> CheckReport:
    """z d/dz of 1/(z)_inf against its logarithmic-derivative expansion."""
    t0 = time.perf_counter()
    inv_poch = poch_z_inf(zdeg, qorder).inverse()
    lhs = z_dz(inv_poch)
    s = bi_zero(zdeg, qorder)
    for m in range(qorder):  # the m-th summand carries q^m
        s = s + bi_monomial(1, 0, m, zdeg, qorder) * bi_geometric_z(m, zdeg, qorder)
    rhs = bi_monomial(1, 1, 0, zdeg, qorder) * inv_poch * s
    return _legs_report(
        "logderiv",
        [("z*d/dz vs log-derivative", bi_first_mismatch(lhs, rhs, zdeg, qorder))],
        qorder, zdeg, t0,
    )


def check_eq_2_2(
    order: int = DEFAULT_ORDER,
    zdeg: int = DEFAULT_ZDEG,
    qorder: int = DEFAULT_QORDER,
) -> CheckReport:
    """(q)_inf S+ = sum q^m/(1-q^m), by two routes.

    The univariate route runs to the full order.  The bivariate route
    differentiates 1/(z)_inf, evaluates at z = q, multiplies by (q)_inf
    and is compared on its own (smaller) trustworthy window.
    """
    t0 = time.perf_counter()
    rhs = divisor_sum_series(order)
    lhs_uni = poch_inf(Q, order) * weighted_inv_poch_sum(order, +1)
    legs = [("univariate route", first_mismatch(lhs_uni, rhs, order))]

    s_bi = substitute_z_eq_q(z_dz(poch_z_inf(zdeg, qorder).inverse()))
    ord_bi = min(s_bi.order, order)
    lhs_bi = poch_inf(Q, ord_bi) * s_bi.truncate(ord_bi)
    legs.append(
        ("bivariate pipeline", first_mismatch(lhs_bi, rhs.truncate(ord_bi), ord_bi))
    )
    return _legs_report("eq_2_2", legs, order, zdeg, t0)


HEINE_LHS_SPEC = HypergeometricSpec((ZERO, Q), (MINUS_Q,), Z)
HEINE_RHS_SPEC = HypergeometricSpec((MINUS_ONE, Z), (ZERO,), Q)


def heine_lhs(zdeg: int, qorder: int) -> BiSeries:
    """2phi1(0, q; -q; q, z), which sums to sum_m z^m/(-q)_m."""
    res = phi(HEINE_LHS_SPEC, qorder, zdeg)
    assert isinstance(res, BiSeries)
    return res


def heine_rhs(zdeg: int, qorder: int) -> BiSeries:
    """[(q)_inf/(-q)_inf] [1/(z)_inf] 2phi1(-1, z; 0; q, q)."""
    ratio = poch_inf(Q, qorder) * poch_inf(MINUS_Q, qorder).inverse()
    tail = phi(HEINE_RHS_SPEC, qorder, zdeg)
    assert isinstance(tail, BiSeries)
    return from_qseries(ratio, zdeg) * poch_z_inf(zdeg, qorder).inverse() * tail


def check_heine_instance(
    zdeg: int = DEFAULT_ZDEG, qorder: int = DEFAULT_QORDER
) -> CheckReport:
    t0 = time.perf_counter()
    lhs = heine_lhs(zdeg, qorder)
    rhs = heine_rhs(zdeg, qorder)
    return _legs_report(
        "heine_instance",
        [("2phi1 vs transformed side", bi_first_mismatch(lhs, rhs, zdeg, qorder))],
        qorder, zdeg, t0,
    )


def check_finite_identity(
    m_max: int = DEFAULT_M_MAX, order: int = DEFAULT_ORDER
) -> CheckReport:
    """(-q)_{m-1} = 1 + sum_{n=1..m-1} (-q)_{n-1} q^n for every m <= m_max,
    plus the bridge sum_{n=0..m-1} (-1)_n q^n = 2(-q)_{m-1} - 1."""
    t0 = time.perf_counter()
    legs: list[tuple[str, Mismatch | None]] = []
    rhs = one(order)  # 1 + running sum, in step with m
    bridge = one(order)  # sum_{n=0..m-1} (-1)_n q^n, starting at the n=0 term
    poch_prev = one(order)  # (-q)_{n-1} for the next n to add
    for m in range(1, m_max + 1):
        lhs_m = poch_finite(MINUS_Q, m - 1, order)
        mm = first_mismatch(lhs_m, rhs, order)
        if mm is not None:
            legs.append((f"largest-part split at m={m}", mm))
            break
        mm = first_mismatch(bridge, lhs_m.scale(2) - one(order), order)
        if mm is not None:
            legs.append((f"bridge at m={m}", mm))
            break
        # extend both running sums to the next m
        n = m
        term = poch_prev * monomial(1, n, order) if n < order else zero(order)
        rhs = rhs + term
        bridge = bridge + term.scale(2)
        if n < order:
            poch_prev = poch_prev * QSeries([1] + [0] * (n - 1) + [1], order)
    return _legs_report("finite_identity", legs, order, None, t0)


def heine_pipeline_series(zdeg: int, qorder: int) -> QSeries:
    """(-q)_inf S- via the transformed bivariate representation.

    Builds F(z, q) = [(q)_inf/(-q)_inf] sum_n (-1)_n q^n / ((q)_n (z q^n)_inf),
    applies z d/dz, evaluates at z = q and multiplies by (-q)_inf.  Trust
    window is min(qorder, zdeg+1).
    """
    ratio = poch_inf(Q, qorder) * poch_inf(MINUS_Q, qorder).inverse()
    inv_tail = poch_z_inf(zdeg, qorder).inverse()  # 1/(z q^n)_inf, n = 0
    c = one(qorder)  # (-1)_n q^n / (q)_n, n = 0
    f = bi_zero(zdeg, qorder)
    for n in range(qorder):  # the n-th term carries q^n
        f = f + from_qseries(c, zdeg) * inv_tail
        # advance to n+1: (-1)_{n+1}/(-1)_n = 1 + q^n, extra q, extra 1/(1-q^{n+1});
        # 1/(z q^{n+1})_inf = (1 - z q^n) / (z q^n)_inf
        growth = [0] * qorder
        growth[0] = 1
        if n == 0:
            growth[0] = 2
        elif n < qorder:
            growth[n] = 1
        c = c * QSeries(growth, qorder) * monomial(1, 1, qorder) * inv_one_minus(
            1, n + 1, qorder
        )
        inv_tail = inv_tail * one_minus_z_q(n, zdeg, qorder)
    f = from_qseries(ratio, zdeg) * f
    s = substitute_z_eq_q(z_dz(f))
    return poch_inf(MINUS_Q, s.order) * s


def eq_2_3_rhs(order: int) -> QSeries:
    """sum_{m>=1} q^m/(1-q^m) (2(-q)_{m-1} - 1)."""
    acc = zero(order)
    poch = one(order)  # (-q)_{m-1}
    for m in range(1, order):
        acc = acc + geometric(m, order) * (poch.scale(2) - one(order))
        if m < order - 1:
            poch = poch * QSeries([1] + [0] * (m - 1) + [1], order)
    return acc


def interchange_sides(order: int) -> tuple[QSeries, QSeries]:
    """Both orders of the double sum over (-1)_n q^n and divisor tails.

    Left: sum_{n>=0} (-1)_n q^n sum_{m>=0} q^{m+n+1}/(1-q^{m+n+1}).
    Right: sum_{m>=1} q^m/(1-q^m) sum_{n=0..m-1} (-1)_n q^n.
    """
    # suffix[j] = sum_{k>=j} q^k/(1-q^k), truncated
    suffix = [zero(order) for _ in range(order + 1)]
    for j in range(order - 1, 0, -1):
        suffix[j] = suffix[j + 1] + geometric(j, order)
    left = zero(order)
    t = one(order)  # (-1)_n q^n, n = 0
    for n in range(order):
        left = left + t * suffix[n + 1]
        growth = [0] * order
        growth[0] = 2 if n == 0 else 1
        if 0 < n < order:
            growth[n] = 1
        t = t * QSeries(growth, order) * monomial(1, 1, order)
    right = zero(order)
    partial = zero(order)  # sum_{n=0..m-1} (-1)_n q^n
    t = one(order)
    for m in range(1, order):
        n = m - 1
        growth = [0] * order
        growth[0] = 2 if n == 0 else 1
        if 0 < n < order:
            growth[n] = 1
        partial = partial + t
        right = right + geometric(m, order) * partial
        t = t * QSeries(growth, order) * monomial(1, 1, order)
    return left, right


def check_eq_2_3(
    order: int = DEFAULT_ORDER,
    zdeg: int = DEFAULT_ZDEG,
    qorder: int = DEFAULT_QORDER,
) -> CheckReport:
    """(-q)_inf S- against the weighted divisor form, three ways.

    Verifies the direct univariate summation, the bivariate pipeline
    through the transformed 2phi1 representation, and the summation
    interchange that links them, as separate legs of one report.
    """
    t0 = time.perf_counter()
    rhs = eq_2_3_rhs(order)
    lhs_uni = poch_inf(MINUS_Q, order) * weighted_inv_poch_sum(order, -1)
    legs = [("univariate route", first_mismatch(lhs_uni, rhs, order))]

    s_bi = heine_pipeline_series(zdeg, qorder)
    ord_bi = min(s_bi.order, order)
    legs.append(
        ("bivariate pipeline", first_mismatch(s_bi.truncate(ord_bi), rhs.truncate(ord_bi), ord_bi))
    )

    left, right = interchange_sides(order)
    legs.append(("summation interchange", first_mismatch(left, right, order)))
    return _legs_report("eq_2_3", legs, order, zdeg, t0)


def check_theorem_1(
    order: int = DEFAULT_ORDER,
    oracle_order: int = DEFAULT_THEOREM_ORACLE_ORDER,
    cap: int = pt.DEFAULT_DISTINCT_CAP,
) -> CheckReport:
    """a(n) = b(n): the concluding assembly, doubled into integers.

    Pure series leg: 2 * genfun_a = (eq_2_2 RHS) + (eq_2_3 RHS) to the
    full order.  Oracle leg: genfun_a against enumerated b(n) up to
    min(order, oracle_order).
    """
    t0 = time.perf_counter()
    ga = genfun_a(order)
    assembled = divisor_sum_series(order) + eq_2_3_rhs(order)
    legs = [("doubled series assembly", first_mismatch(ga.scale(2), assembled, order))]
    n_oracle = min(order, oracle_order)
    legs.append(
        (
            "b(n) enumeration",
            first_mismatch(
                ga.truncate(n_oracle), genfun_b_oracle(n_oracle, cap), n_oracle
            ),
        )
    )
    return _legs_report("theorem_1", legs, order, None, t0)


# -- catalog and harness ------------------------------------------------------


@dataclass(frozen=True)
class CheckDef:
    name: str
    summary: str
    runner: Callable[..., CheckReport]
    kind: str  # which knobs the runner takes: series | oracle | bivariate | mixed
    default_order: int | None = None


CHECKS: dict[str, CheckDef] = {
    c.name: c
    for c in [
        CheckDef(
            "eq_1_1",
            "sum a(n) q^n = sum_{m>=1} q^m/(1-q^m) (-q)_{m-1}, vs gap-free enumeration",
            check_eq_1_1,
            "oracle",
            DEFAULT_ORACLE_ORDER,
        ),
        CheckDef(
            "sigma_sums_unsigned",
            "sum_{distinct} sigma(pi) q^|pi| = sum_{m>=1} m q^m (-q^{m+1})_inf",
            check_sigma_sums_unsigned,
            "oracle",
            DEFAULT_ORACLE_ORDER,
        ),
        CheckDef(
            "sigma_sums_signed",
            "sum_{distinct} (-1)^#(pi) sigma(pi) q^|pi| = -sum_{m>=1} m q^m (q^{m+1})_inf",
            check_sigma_sums_signed,
            "oracle",
            DEFAULT_ORACLE_ORDER,
        ),
        CheckDef(
            "eq_2_1",
            "2 sum b(n) q^n = (q)_inf sum m q^m/(q)_m + (-q)_inf sum m q^m/(-q)_m",
            check_eq_2_1,
            "oracle",
            DEFAULT_ORACLE_ORDER,
        ),
        CheckDef(
            "euler_sum",
            "sum_{m>=0} z^m/(q)_m = 1/(z)_inf",
            check_euler_sum,
            "bivariate",
        ),
        CheckDef(
            "logderiv",
            "z d/dz 1/(z)_inf = (z/(z)_inf) sum_{m>=0} q^m/(1-z q^m)",
            check_logderiv,
            "bivariate",
        ),
        CheckDef(
            "eq_2_2",
            "(q)_inf sum m q^m/(q)_m = sum_{m>=1} q^m/(1-q^m)",
            check_eq_2_2,
            "mixed",
            DEFAULT_ORDER,
        ),
        CheckDef(
            "heine_instance",
            "2phi1(0,q;-q;q,z) = [(q)_inf/(-q)_inf][1/(z)_inf] 2phi1(-1,z;0;q,q)",
            check_heine_instance,
            "bivariate",
        ),
        CheckDef(
            "finite_identity",
            "(-q)_{m-1} = 1 + sum_{n=1..m-1} (-q)_{n-1} q^n, and the (-1)_n bridge",
            check_finite_identity,
            "series",
            DEFAULT_ORDER,
        ),
        CheckDef(
            "eq_2_3",
            "(-q)_inf sum m q^m/(-q)_m = sum q^m/(1-q^m) (2(-q)_{m-1}-1), three routes",
            check_eq_2_3,
            "mixed",
            DEFAULT_ORDER,
        ),
        CheckDef(
            "theorem_1",
            "a(n) = b(n): 2 genfun_a = eq_2_2 RHS + eq_2_3 RHS, plus b(n) enumeration",
            check_theorem_1,
            "mixed",
            DEFAULT_ORDER,
        ),
    ]
}


def run_check(
    name: str,
    order: int | None = None,
    zdeg: int | None = None,
    qorder: int | None = None,
    oracle_order: int | None = None,
    m_max: int | None = None,
    cap: int | None = None,
) -> CheckReport:
    """Run one catalog check with per-kind defaults.

    `order` drives series comparisons; enumeration-backed checks clamp it
    to their own default depth (and to `cap`) so that a large series
    order never triggers an astronomically large brute-force enumeration.
    """
    try:
        cdef = CHECKS[name]
    except KeyError:
        raise KeyError(
            f"unknown check {name!r}; valid names: {', '.join(sorted(CHECKS))}"
        ) from None
    zd = DEFAULT_ZDEG if zdeg is None else zdeg
    qo = DEFAULT_QORDER if qorder is None else qorder
    if cdef.kind == "bivariate":
        return cdef.runner(zdeg=zd, qorder=qo)
    if cdef.kind == "oracle":
        depth = DEFAULT_ORACLE_ORDER if oracle_order is None else oracle_order
        if order is not None:
            depth = min(depth, order)
        if cap is not None:
            depth = min(depth, cap + 1)
        return cdef.runner(order=depth)
    if cdef.kind == "series":
        kwargs = {"order": DEFAULT_ORDER if order is None else order}
        if name == "finite_identity":
            kwargs["m_max"] = DEFAULT_M_MAX if m_max is None else m_max
        return cdef.runner(**kwargs)
    # mixed: full series order plus bivariate window
    kwargs = {"order": DEFAULT_ORDER if order is None else order}
    if name in ("eq_2_2", "eq_2_3"):
        kwargs.update(zdeg=zd, qorder=qo)
    if name == "theorem_1":
        depth = DEFAULT_THEOREM_ORACLE_ORDER if oracle_order is None else oracle_order
        kwargs["oracle_order"] = min(depth, kwargs["order"])
        if cap is not None:
            kwargs["cap"] = cap
    return cdef.runner(**kwargs)


def run_checks(
    names: Iterable[str],
    jobs: int = 1,
    **kwargs,
) -> list[CheckReport]:
    """Run several checks, optionally on a process pool.

    Reports come back in name-sorted order regardless of completion
    order, so output is deterministic under any parallelism.
    """
    names = sorted(names)
    for n in names:
        if n not in CHECKS:
            raise KeyError(
                f"unknown check {n!r}; valid names: {', '.join(sorted(CHECKS))}"
            )
    if jobs > 1 and len(names) > 1:
        import concurrent.futures as cf

        with cf.ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {n: pool.submit(run_check, n, **kwargs) for n in names}
            return [futures[n].result() for n in names]
    return [run_check(n, **kwargs) for n in names]
