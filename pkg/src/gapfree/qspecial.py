"""q-Pochhammer symbols and the truncated basic hypergeometric sum.

Parameters and arguments are monomials sign*q^e (or 0, or the formal
variable z), which covers every instance the identity suite needs without
dragging in symbolic algebra.  All results are exact truncated series.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .series import QSeries, inv_one_minus, one, zero
from .biseries import (
    BiSeries,
    bi_one,
    bi_zero,
    bi_monomial,
    from_qseries,
    one_minus_z_q,
)


class _FormalZ:
    """Singleton marker for the formal variable z."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "z"


Z = _FormalZ()


@dataclass(frozen=True)
class MonomialArg:
    """A parameter of the form sign * q^exponent, or the distinguished 0."""

    sign: int = 1
    exponent: int = 0
    zero: bool = False

    def __post_init__(self):
        if self.zero:
            # normalize so ZERO compares equal however it was spelled
            object.__setattr__(self, "sign", 1)
            object.__setattr__(self, "exponent", 0)
            return
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.exponent < 0:
            raise ValueError("exponent must be >= 0")

    def __repr__(self) -> str:
        if self.zero:
            return "0"
        s = "-" if self.sign < 0 else ""
        if self.exponent == 0:
            return f"{s}1"
        if self.exponent == 1:
            return f"{s}q"
        return f"{s}q^{self.exponent}"


ZERO = MonomialArg(zero=True)
ONE = MonomialArg(1, 0)
MINUS_ONE = MonomialArg(-1, 0)


def q_power(e: int, sign: int = 1) -> MonomialArg:
    return MonomialArg(sign, e)


Q = q_power(1)
MINUS_Q = q_power(1, -1)


def _factor(a: MonomialArg, k: int, order: int) -> QSeries | None:
    """1 - a*q^k as a series, or None when it is 1 within the window."""
    e = a.exponent + k
    if e >= order:
        return None
    cs = [0] * order
    cs[0] = 1
    cs[e] -= a.sign  # e = 0 collapses to the constant 1 - sign
    return QSeries(cs, order)


def poch_finite(a: MonomialArg, n: int, order: int) -> QSeries:
    """(a; q)_n = product of (1 - a q^k), k = 0..n-1; empty product is 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = one(order)
    if a.zero:
        return acc
    for k in range(n):
        f = _factor(a, k, order)
        if f is None:
            break  # exponents only grow from here
        acc = acc * f
    return acc


def poch_inf(a: MonomialArg, order: int) -> QSeries:
    """(a; q)_infinity truncated to the window.

    Multiplies factors until 1 - a q^k is 1 modulo q^order.  The one
    degenerate input is a = +1, whose product vanishes identically and is
    rejected; a = -1 is fine and carries the constant factor 2.
    """
    if a.zero:
        return one(order)
    if a.sign == 1 and a.exponent == 0:
        raise ValueError("(1; q)_infinity is identically zero; rejected as degenerate")
    acc = one(order)
    k = 0
    while True:
        f = _factor(a, k, order)
        if f is None:
            return acc
        acc = acc * f
        k += 1


Param = MonomialArg | _FormalZ


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameter lists of a (r+1)phi(s) sum with monomial (or z) entries.

    numerator holds a_0..a_r, denominator b_1..b_s.  Denominator entries
    must keep every (b; q)_n a unit of the integer series ring: 0 is fine
    ((0; q)_n = 1), a monomial needs exponent >= 1 (b = +1 makes the factor
    vanish, b = -1 makes its constant term 2, not invertible over Z).
    """

    numerator: tuple[Param, ...]
    denominator: tuple[Param, ...] = field(default=())
    argument: Param = field(default_factory=lambda: Q)

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(self, "denominator", tuple(self.denominator))
        if not self.numerator:
            raise ValueError("numerator must hold at least one parameter (a_0)")
        for b in self.denominator:
            if isinstance(b, _FormalZ):
                raise ValueError("z is not supported as a denominator parameter")
            if not b.zero and b.exponent == 0:
                raise ValueError(
                    f"denominator parameter {b!r} makes (b; q)_n non-invertible"
                )

    @property
    def s_minus_r(self) -> int:
        return len(self.denominator) - (len(self.numerator) - 1)

    def involves_z(self) -> bool:
        return isinstance(self.argument, _FormalZ) or any(
            isinstance(a, _FormalZ) for a in self.numerator
        )


def phi(
    spec: HypergeometricSpec, order: int, zdeg: int | None = None
) -> QSeries | BiSeries:
    """Truncated basic hypergeometric sum

        sum_n  [prod_i (a_i; q)_n / ((q; q)_n prod_j (b_j; q)_n)]
               * ((-1)^n q^binom(n,2))^(s-r) * arg^n.

    Returns a QSeries when no parameter or argument is z, else a BiSeries
    (zdeg required).  Summation stops once a term's minimal exponent
    leaves the window: n*e for a monomial argument q^e, n > zdeg for
    argument z, or earlier if the running term vanishes (a numerator
    parameter of +1 kills every n >= 1).  Specs whose terms never leave
    the window are rejected rather than looped on forever.
    """
    d = spec.s_minus_r
    bivariate = spec.involves_z()
    if bivariate and zdeg is None:
        raise ValueError("zdeg is required when z appears in the spec")

    arg = spec.argument
    arg_is_z = isinstance(arg, _FormalZ)
    if not arg_is_z and arg.zero:
        # only the n = 0 term survives; the normalization never enters
        return bi_one(zdeg, order) if bivariate else one(order)
    if d < 0:
        raise ValueError(
            "s < r would need negative powers of q in the normalization; unsupported"
        )

    # Guarantee termination up front.
    if not arg_is_z and arg.exponent == 0 and d == 0:
        vanishing = any(
            isinstance(a, MonomialArg) and not a.zero and a.sign == 1 and a.exponent == 0
            for a in spec.numerator
        )
        if not vanishing:
            raise ValueError("non-truncating sum: terms never leave the window")

    def min_exponent(n: int) -> int:
        if arg_is_z:
            return 0
        return n * arg.exponent + d * (n * (n - 1) // 2)

    if bivariate:
        total = bi_zero(zdeg, order)
        term: BiSeries = bi_one(zdeg, order)
    else:
        total = zero(order)
        term = one(order)

    n = 0
    while True:
        total = total + term
        n += 1
        if arg_is_z and n > zdeg:
            break
        if min_exponent(n) >= order:
            break
        k = n - 1  # new Pochhammer factors use q^(n-1)
        factors_uni: list[QSeries] = []
        factors_bi: list[BiSeries] = []
        for a in spec.numerator:
            if isinstance(a, _FormalZ):
                factors_bi.append(one_minus_z_q(k, zdeg, order))
            elif not a.zero:
                f = _factor(a, k, order)
                if f is not None:
                    factors_uni.append(f)
        factors_uni.append(inv_one_minus(1, n, order))  # 1/(1 - q^n) from (q; q)_n
        for b in spec.denominator:
            if not b.zero:
                e = b.exponent + k
                if e < order:
                    factors_uni.append(inv_one_minus(b.sign, e, order))
        if d:
            cs = [0] * order
            cs[k * d] = (-1) ** d  # ratio of consecutive normalization factors
            factors_uni.append(QSeries(cs, order))
        if arg_is_z:
            factors_bi.append(bi_monomial(1, 1, 0, zdeg, order))
        else:
            e = arg.exponent
            cs = [0] * order
            cs[e] = arg.sign
            factors_uni.append(QSeries(cs, order))
        if bivariate:
            for f in factors_uni:
                term = term * from_qseries(f, zdeg)
            for f in factors_bi:
                term = term * f
        else:
            for f in factors_uni:
                term = term * f
        if term.is_zero():
            break
    return total
