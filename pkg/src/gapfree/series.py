"""Truncated formal power series in q over the integers.

A :class:`QSeries` of order N stores the exact coefficients of q^0 .. q^(N-1)
and asserts nothing about higher exponents.  Every binary operation returns a
result at the minimum order of its operands, so "valid to order" is an
invariant carried by the value rather than a convention the caller must
track.  Coefficients are plain Python ints and therefore never overflow.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple


class Mismatch(NamedTuple):
    """First disagreeing coefficient found by :func:`first_mismatch`."""

    exponent: int
    lhs: int
    rhs: int


class QSeries:
    """A formal power series in q known modulo q^order.

    Instances are immutable; all arithmetic returns new values.  Trailing
    zero coefficients are stored explicitly so ``len(coeffs) == order``
    always holds.
    """

    __slots__ = ("coeffs", "order")

    coeffs: tuple[int, ...]
    order: int

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        cs = tuple(int(c) for c in coeffs)
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("order must be >= 1")
        if len(cs) < order:
            cs = cs + (0,) * (order - len(cs))
        elif len(cs) > order:
            cs = cs[:order]
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # -- accessors -----------------------------------------------------

    def __getitem__(self, n: int) -> int:
        """Exact coefficient of q^n; n must lie inside the known window."""
        if not 0 <= n < self.order:
            raise ValueError(
                f"coefficient of q^{n} is beyond truncation (order {self.order})"
            )
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def nonzero_terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs of the nonzero entries."""
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    def truncate(self, order: int) -> "QSeries":
        """Restrict to a smaller (or equal) order."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.coeffs[:order], order)

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return QSeries([a[i] + b[i] for i in range(n)], n)

    def __sub__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return QSeries([a[i] - b[i] for i in range(n)], n)

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs], self.order)

    def scale(self, k: int) -> "QSeries":
        return QSeries([k * c for c in self.coeffs], self.order)

    def __rmul__(self, k: int) -> "QSeries":
        if not isinstance(k, int):
            return NotImplemented
        return self.scale(k)

    def __mul__(self, other: "QSeries") -> "QSeries":
        """Truncated Cauchy product at the minimum order.

        Schoolbook convolution, but driven by the operand with fewer
        nonzero coefficients: multiplying by a binomial like 1 + q^m
        costs O(order), which the generating-function sums rely on.
        """
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        terms_a = [(e, c) for e, c in enumerate(a[:n]) if c]
        terms_b = [(e, c) for e, c in enumerate(b[:n]) if c]
        if len(terms_b) < len(terms_a):
            terms_a, terms_b = terms_b, terms_a
            a, b = b, a
        out = [0] * n
        for e, c in terms_a:
            lim = n - e
            for k in range(min(lim, len(b))):
                bk = b[k]
                if bk:
                    out[e + k] += c * bk
        return QSeries(out, n)

    def inverse(self) -> "QSeries":
        """Multiplicative inverse, defined when the constant term is +-1.

        Solves mul(self, b) = 1 for b coefficient by coefficient.  A
        non-unit constant term would force rational coefficients, which
        this ring does not admit.
        """
        a = self.coeffs
        c0 = a[0]
        if c0 not in (1, -1):
            raise ValueError("non-invertible series: constant term must be +1 or -1")
        n = self.order
        nz = [(k, a[k]) for k in range(1, n) if a[k]]
        out = [0] * n
        out[0] = c0  # 1/1 = 1 and 1/-1 = -1
        for m in range(1, n):
            s = 0
            for k, ak in nz:
                if k > m:
                    break
                s += ak * out[m - k]
            out[m] = -c0 * s
        return QSeries(out, n)

    # -- comparisons and display ----------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __str__(self) -> str:
        terms = []
        for e, c in self.nonzero_terms():
            if e == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}q" if e == 1 else f"{mag}q^{e}"
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return f"0 + O(q^{self.order})"
        head = terms[0].replace("+ ", "", 1).replace("- ", "-", 1)
        return " ".join([head] + terms[1:]) + f" + O(q^{self.order})"

    def __repr__(self) -> str:
        return f"QSeries({self})"


# -- constructors --------------------------------------------------------


def zero(order: int) -> QSeries:
    """The zero series at the given order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return QSeries((0,) * order, order)


def one(order: int) -> QSeries:
    return monomial(1, 0, order)


def monomial(c: int, e: int, order: int) -> QSeries:
    """c * q^e.  The exponent must be visible: e >= order is a caller error,
    since silently truncating the constructor's only term helps nobody."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if e < 0:
        raise ValueError("exponent must be >= 0")
    if e >= order:
        raise ValueError(f"monomial exponent {e} not below order {order}")
    cs = [0] * order
    cs[e] = c
    return QSeries(cs, order)


def geometric(m: int, order: int) -> QSeries:
    """q^m / (1 - q^m) = q^m + q^2m + q^3m + ..., truncated."""
    if m < 1:
        raise ValueError("m must be >= 1")
    cs = [0] * order
    for e in range(m, order, m):
        cs[e] = 1
    return QSeries(cs, order)


def inv_one_minus(sign: int, e: int, order: int) -> QSeries:
    """1 / (1 - sign*q^e) for e >= 1, as a sparse geometric-type series."""
    if e < 1:
        raise ValueError("exponent must be >= 1")
    cs = [0] * order
    s = 1
    for k in range(0, order, e):
        cs[k] = s
        s *= sign
    return QSeries(cs, order)


# -- comparison helpers ----------------------------------------------------


def first_mismatch(a: QSeries, b: QSeries, order: int) -> Mismatch | None:
    """Smallest exponent below `order` where a and b disagree, or None."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if order > a.order or order > b.order:
        raise ValueError(
            f"comparison order {order} exceeds operand order "
            f"{min(a.order, b.order)}"
        )
    for e in range(order):
        if a.coeffs[e] != b.coeffs[e]:
            return Mismatch(e, a.coeffs[e], b.coeffs[e])
    return None


def eq_up_to(a: QSeries, b: QSeries, order: int) -> bool:
    """True iff all coefficients of q^0 .. q^(order-1) agree."""
    return first_mismatch(a, b, order) is None
