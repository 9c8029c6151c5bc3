"""Truncated series in two variables: z (bounded degree) and q (truncated).

A :class:`BiSeries` stores a (zdeg+1) x qorder table of integer
coefficients: entry (j, k) is the coefficient of z^j q^k.  The z-degree is
a second truncation window: values are known for z-powers 0..zdeg and
q-powers 0..qorder-1.  Binary operations return the minimum of both
dimensions, mirroring the univariate min-order rule.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .series import QSeries


class BiMismatch(NamedTuple):
    exponent: tuple[int, int]  # (z-degree, q-exponent)
    lhs: int
    rhs: int


class BiSeries:
    __slots__ = ("rows", "zdeg", "qorder")

    rows: tuple[tuple[int, ...], ...]
    zdeg: int
    qorder: int

    def __init__(self, rows: Iterable[Iterable[int]], zdeg: int, qorder: int):
        if zdeg < 0:
            raise ValueError("zdeg must be >= 0")
        if qorder < 1:
            raise ValueError("qorder must be >= 1")
        table = []
        for row in rows:
            r = tuple(int(c) for c in row)
            if len(r) < qorder:
                r = r + (0,) * (qorder - len(r))
            table.append(r[:qorder])
        while len(table) < zdeg + 1:
            table.append((0,) * qorder)
        object.__setattr__(self, "rows", tuple(table[: zdeg + 1]))
        object.__setattr__(self, "zdeg", zdeg)
        object.__setattr__(self, "qorder", qorder)

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    # -- accessors -----------------------------------------------------

    def coeff(self, j: int, k: int) -> int:
        if not (0 <= j <= self.zdeg and 0 <= k < self.qorder):
            raise ValueError(f"(z^{j} q^{k}) outside window ({self.zdeg}, {self.qorder})")
        return self.rows[j][k]

    def row(self, j: int) -> QSeries:
        """The coefficient of z^j as a univariate series in q."""
        if not 0 <= j <= self.zdeg:
            raise ValueError(f"z-degree {j} outside window")
        return QSeries(self.rows[j], self.qorder)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def truncate(self, zdeg: int, qorder: int) -> "BiSeries":
        if zdeg > self.zdeg or qorder > self.qorder:
            raise ValueError("cannot extend a truncated series")
        return BiSeries(self.rows[: zdeg + 1], zdeg, qorder)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiSeries)
            and self.zdeg == other.zdeg
            and self.qorder == other.qorder
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.zdeg, self.qorder))

    def __repr__(self) -> str:
        nz = sum(1 for r in self.rows for c in r if c)
        return f"BiSeries(zdeg={self.zdeg}, qorder={self.qorder}, {nz} nonzero terms)"

    # -- ring operations -----------------------------------------------

    def _dims(self, other: "BiSeries") -> tuple[int, int]:
        return min(self.zdeg, other.zdeg), min(self.qorder, other.qorder)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        zd, qo = self._dims(other)
        rows = [
            [self.rows[j][k] + other.rows[j][k] for k in range(qo)]
            for j in range(zd + 1)
        ]
        return BiSeries(rows, zd, qo)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        zd, qo = self._dims(other)
        rows = [
            [self.rows[j][k] - other.rows[j][k] for k in range(qo)]
            for j in range(zd + 1)
        ]
        return BiSeries(rows, zd, qo)

    def __neg__(self) -> "BiSeries":
        return BiSeries([[-c for c in r] for r in self.rows], self.zdeg, self.qorder)

    def scale(self, k: int) -> "BiSeries":
        return BiSeries([[k * c for c in r] for r in self.rows], self.zdeg, self.qorder)

    def __rmul__(self, k: int) -> "BiSeries":
        if not isinstance(k, int):
            return NotImplemented
        return self.scale(k)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        """Exact 2-D truncated convolution at the minimum dimensions.

        Driven by the operand with fewer nonzero cells, so multiplying by
        a factor like 1 - z*q^k stays cheap.
        """
        if not isinstance(other, BiSeries):
            return NotImplemented
        zd, qo = self._dims(other)
        a, b = self, other
        cells_a = [
            (j, k, c)
            for j in range(min(a.zdeg, zd) + 1)
            for k, c in enumerate(a.rows[j][:qo])
            if c
        ]
        cells_b = [
            (j, k, c)
            for j in range(min(b.zdeg, zd) + 1)
            for k, c in enumerate(b.rows[j][:qo])
            if c
        ]
        if len(cells_b) < len(cells_a):
            cells_a = cells_b
            a, b = b, a
        out = [[0] * qo for _ in range(zd + 1)]
        brows = b.rows
        for j, k, c in cells_a:
            for j2 in range(min(zd - j, b.zdeg) + 1):
                target = out[j + j2]
                rb = brows[j2]
                for k2 in range(qo - k):
                    v = rb[k2]
                    if v:
                        target[k + k2] += c * v
        return BiSeries(out, zd, qo)

    def inverse(self) -> "BiSeries":
        """Inverse when the (0,0) coefficient is +-1.

        Treats the table as a z-polynomial over the univariate q-series
        ring and solves row by row: b_0 = 1/a_0 and
        b_j = -(1/a_0) * sum_{i=1..j} a_i b_{j-i}.
        """
        if self.rows[0][0] not in (1, -1):
            raise ValueError("non-invertible series: constant term must be +1 or -1")
        a = [QSeries(r, self.qorder) for r in self.rows]
        inv0 = a[0].inverse()
        b = [inv0]
        for j in range(1, self.zdeg + 1):
            s = None
            for i in range(1, j + 1):
                if a[i].is_zero():
                    continue
                t = a[i] * b[j - i]
                s = t if s is None else s + t
            if s is None:
                b.append(QSeries((0,) * self.qorder, self.qorder))
            else:
                b.append(-(inv0 * s))
        return BiSeries([bi.coeffs for bi in b], self.zdeg, self.qorder)


# -- constructors --------------------------------------------------------


def bi_zero(zdeg: int, qorder: int) -> BiSeries:
    return BiSeries([], zdeg, qorder)


def bi_one(zdeg: int, qorder: int) -> BiSeries:
    return bi_monomial(1, 0, 0, zdeg, qorder)


def bi_monomial(c: int, zpow: int, qpow: int, zdeg: int, qorder: int) -> BiSeries:
    if not (0 <= zpow <= zdeg and 0 <= qpow < qorder):
        raise ValueError(f"term z^{zpow} q^{qpow} outside window ({zdeg}, {qorder})")
    rows = [[0] * qorder for _ in range(zdeg + 1)]
    rows[zpow][qpow] = c
    return BiSeries(rows, zdeg, qorder)


def from_qseries(s: QSeries, zdeg: int) -> BiSeries:
    """Embed a univariate series as the z^0 row."""
    return BiSeries([s.coeffs], zdeg, s.order)


def bi_geometric_z(e: int, zdeg: int, qorder: int) -> BiSeries:
    """Expansion of 1 / (1 - z q^e): sum of z^j q^(j*e) over j >= 0."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    rows = [[0] * qorder for _ in range(zdeg + 1)]
    for j in range(zdeg + 1):
        if j * e < qorder:
            rows[j][j * e] = 1
    return BiSeries(rows, zdeg, qorder)


def one_minus_z_q(e: int, zdeg: int, qorder: int) -> BiSeries:
    """The factor 1 - z q^e; collapses to 1 when q^e is outside the window."""
    rows = [[0] * qorder for _ in range(zdeg + 1)]
    rows[0][0] = 1
    if zdeg >= 1 and e < qorder:
        rows[1][e] = -1
    return BiSeries(rows, zdeg, qorder)


def poch_z_inf(zdeg: int, qorder: int) -> BiSeries:
    """(z; q)_infinity truncated: the product of (1 - z q^k) over k >= 0.

    Factors with k >= qorder differ from 1 only at q-order >= qorder and
    are therefore omitted; the product over k < qorder is exact within
    the window.
    """
    acc = bi_one(zdeg, qorder)
    for k in range(qorder):
        acc = acc * one_minus_z_q(k, zdeg, qorder)
    return acc


def z_poch_finite(n: int, zdeg: int, qorder: int) -> BiSeries:
    """(z; q)_n = product of (1 - z q^k) for k = 0..n-1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = bi_one(zdeg, qorder)
    for k in range(min(n, qorder)):
        acc = acc * one_minus_z_q(k, zdeg, qorder)
    return acc


# -- calculus and specialization -----------------------------------------


def dz(a: BiSeries) -> BiSeries:
    """Formal derivative in z: (j, k) of the result is (j+1)*a[j+1][k].

    The z-degree drops by one (a degree-0 input keeps zdeg 0 with a zero
    result, there being no lower degree to shrink to).
    """
    if a.zdeg == 0:
        return bi_zero(0, a.qorder)
    rows = [
        [(j + 1) * c for c in a.rows[j + 1]]
        for j in range(a.zdeg)
    ]
    return BiSeries(rows, a.zdeg - 1, a.qorder)


def z_dz(a: BiSeries) -> BiSeries:
    """The operator z * d/dz, fused: row j of the result is j * row j.

    Unlike composing a z-multiply after :func:`dz`, no top row is lost:
    the degree-j coefficient of z * da/dz is exactly j * a_j, which is
    known for every j in the window.
    """
    rows = [[j * c for c in a.rows[j]] for j in range(a.zdeg + 1)]
    return BiSeries(rows, a.zdeg, a.qorder)


def substitute_z_eq_q(a: BiSeries) -> QSeries:
    """Evaluate at z = q: the term z^j q^k becomes q^(j+k).

    The result is only trustworthy to order min(qorder, zdeg+1): the
    first discarded z-degree, zdeg+1, would have landed at exponent
    zdeg+1 or higher.  That cap is enforced in the returned order.
    """
    order = min(a.qorder, a.zdeg + 1)
    out = [0] * order
    for j in range(min(a.zdeg + 1, order)):
        row = a.rows[j]
        for k in range(order - j):
            c = row[k]
            if c:
                out[j + k] += c
    return QSeries(out, order)


# -- comparison ------------------------------------------------------------


def bi_first_mismatch(
    a: BiSeries, b: BiSeries, zdeg: int, qorder: int
) -> BiMismatch | None:
    """First cell (scanning z-degree then q-exponent) where a and b differ."""
    if zdeg > min(a.zdeg, b.zdeg) or qorder > min(a.qorder, b.qorder):
        raise ValueError("comparison window exceeds an operand's window")
    for j in range(zdeg + 1):
        ra, rb = a.rows[j], b.rows[j]
        for k in range(qorder):
            if ra[k] != rb[k]:
                return BiMismatch((j, k), ra[k], rb[k])
    return None


def bi_eq_up_to(a: BiSeries, b: BiSeries, zdeg: int, qorder: int) -> bool:
    return bi_first_mismatch(a, b, zdeg, qorder) is None
