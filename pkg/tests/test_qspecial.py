import pytest

from gapfree.series import QSeries, one, monomial
from gapfree.biseries import BiSeries, bi_one, bi_zero, from_qseries, z_poch_finite
from gapfree.qspecial import (
    MINUS_ONE,
    MINUS_Q,
    ONE,
    Q,
    Z,
    ZERO,
    HypergeometricSpec,
    MonomialArg,
    phi,
    poch_finite,
    poch_inf,
    q_power,
)


def naive_product(factors: list[list[int]], order: int) -> list[int]:
    """Brute-force expansion of a product of polynomials, for oracles."""
    out = [0] * order
    out[0] = 1
    for f in factors:
        nxt = [0] * order
        for i, ci in enumerate(out):
            if ci:
                for j, cj in enumerate(f):
                    if cj and i + j < order:
                        nxt[i + j] += ci * cj
        out = nxt
    return out


# -- MonomialArg ----------------------------------------------------------------


def test_monomial_arg_validation():
    with pytest.raises(ValueError):
        MonomialArg(2, 0)
    with pytest.raises(ValueError):
        MonomialArg(1, -1)


def test_zero_normalizes():
    assert MonomialArg(zero=True) == MonomialArg(-1, 5, zero=True)
    assert repr(ZERO) == "0"
    assert repr(MINUS_Q) == "-q"
    assert repr(q_power(3)) == "q^3"


# -- finite Pochhammer ------------------------------------------------------------


def test_poch_finite_minus_q_2():
    # (1 + q)(1 + q^2)
    assert poch_finite(MINUS_Q, 2, 5).coeffs == (1, 1, 1, 1, 0)


def test_poch_finite_empty_product():
    assert poch_finite(q_power(7), 0, 4) == one(4)
    assert poch_finite(ZERO, 9, 4) == one(4)


def test_poch_finite_minus_one():
    # (1+1)(1+q)(1+q^2) = 2 (-q; q)_2
    got = poch_finite(MINUS_ONE, 3, 4)
    assert got == poch_finite(MINUS_Q, 2, 4).scale(2)
    assert got.coeffs == (2, 2, 2, 2)


def test_poch_finite_vs_naive_oracle():
    # (q; q)_4 at order 9, expanded brute force
    factors = []
    for k in range(4):
        f = [0] * 9
        f[0] = 1
        f[1 + k] = -1
        factors.append(f)
    assert list(poch_finite(Q, 4, 9).coeffs) == naive_product(factors, 9)


@pytest.mark.parametrize("a", [Q, MINUS_Q, q_power(2), q_power(3, -1), MINUS_ONE])
@pytest.mark.parametrize("n", [0, 1, 3, 6])
def test_poch_finite_recurrence(a, n):
    # (a)_{n+1} = (a)_n * (1 - a q^n)
    order = 12
    factor = one(order)
    e = a.exponent + n
    if e < order:
        factor = factor - monomial(a.sign, e, order)
    assert poch_finite(a, n + 1, order) == poch_finite(a, n, order) * factor


# -- infinite Pochhammer ------------------------------------------------------------


def test_poch_inf_pentagonal():
    assert poch_inf(Q, 8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_poch_inf_zero_arg():
    assert poch_inf(ZERO, 5) == one(5)


def test_poch_inf_rejects_plus_one():
    with pytest.raises(ValueError, match="identically zero"):
        poch_inf(ONE, 5)


def test_poch_inf_minus_one_carries_factor_two():
    assert poch_inf(MINUS_ONE, 10) == poch_inf(MINUS_Q, 10).scale(2)


def test_shift_law():
    # (q^{m+1})_inf (q)_m = (q)_inf
    for m in range(1, 11):
        lhs = poch_inf(q_power(m + 1), 12) * poch_finite(Q, m, 12)
        assert lhs == poch_inf(Q, 12)


def test_shift_law_m3_naive_oracle():
    # both sides expanded independently at m = 3, order 12
    order, m = 12, 3
    tail = []
    for k in range(m + 1, order):
        f = [0] * order
        f[0] = 1
        f[k] = -1
        tail.append(f)
    finite = []
    for k in range(1, m + 1):
        f = [0] * order
        f[0] = 1
        f[k] = -1
        finite.append(f)
    assert naive_product(tail + finite, order) == naive_product(
        [f for f in (tail + finite)], order
    )
    lhs = naive_product(tail, order)
    lhs = naive_product([lhs] + finite, order)
    assert list((poch_inf(q_power(m + 1), order) * poch_finite(Q, m, order)).coeffs) == lhs
    assert list(poch_inf(Q, order).coeffs) == lhs


def test_minus_one_bridge():
    # (-1)_n = 2 (-q)_{n-1} for n >= 1; (-1)_0 = 1
    assert poch_finite(MINUS_ONE, 0, 6) == one(6)
    for n in range(1, 9):
        assert poch_finite(MINUS_ONE, n, 16) == poch_finite(
            MINUS_Q, n - 1, 16
        ).scale(2)


# -- hypergeometric spec -------------------------------------------------------------


def test_spec_validation():
    with pytest.raises(ValueError, match="non-invertible"):
        HypergeometricSpec((Q,), (ONE,), Q)
    with pytest.raises(ValueError, match="non-invertible"):
        HypergeometricSpec((Q,), (MINUS_ONE,), Q)
    with pytest.raises(ValueError, match="denominator"):
        HypergeometricSpec((Q,), (Z,), Q)
    with pytest.raises(ValueError):
        HypergeometricSpec((), (), Q)
    spec = HypergeometricSpec((ZERO, Q), (MINUS_Q,), Z)
    assert spec.s_minus_r == 0
    assert spec.involves_z()


def test_phi_zero_argument_is_one():
    assert phi(HypergeometricSpec((Q,), (), ZERO), 6) == one(6)
    assert phi(HypergeometricSpec((Q, Z), (), ZERO), 6, zdeg=3) == bi_one(3, 6)


def test_phi_rejects_non_truncating():
    with pytest.raises(ValueError, match="non-truncating"):
        phi(HypergeometricSpec((MINUS_ONE,), (), ONE), 6)


def test_phi_with_unit_numerator_terminates():
    # a numerator parameter of +1 kills every term past n = 0
    assert phi(HypergeometricSpec((ONE,), (), ONE), 6) == one(6)


def test_phi_rejects_s_less_than_r():
    with pytest.raises(ValueError, match="negative powers"):
        phi(HypergeometricSpec((Q, Q, Q), (), Q), 6)


def test_phi_requires_zdeg_for_z():
    with pytest.raises(ValueError, match="zdeg"):
        phi(HypergeometricSpec((ZERO, Q), (MINUS_Q,), Z), 6)


def test_phi_univariate_direct_summation():
    # 1phi1(0; q^2; q, q): s - r = 1, so each term carries
    # (-1)^n q^binom(n,2) q^n / ((q)_n (q^2)_n)
    spec = HypergeometricSpec((ZERO,), (q_power(2),), Q)
    assert spec.s_minus_r == 1
    order = 14
    expect = QSeries([0] * order, order)
    n = 0
    while n * (n + 1) // 2 < order:  # n from arg, binom(n,2) from the norm factor
        term = one(order)
        term = term * poch_finite(Q, n, order).inverse()
        term = term * poch_finite(q_power(2), n, order).inverse()
        e = n + n * (n - 1) // 2
        if e >= order:
            break
        term = term * monomial((-1) ** n, e, order)
        expect = expect + term
        n += 1
    assert phi(spec, order) == expect


def test_phi_bivariate_z_argument():
    # 2phi1(0, q; -q; q, z) row m must be 1/(-q)_m
    res = phi(HypergeometricSpec((ZERO, Q), (MINUS_Q,), Z), 10, zdeg=5)
    assert isinstance(res, BiSeries)
    for m in range(6):
        assert res.row(m) == poch_finite(MINUS_Q, m, 10).inverse()


def test_phi_bivariate_z_parameter():
    # 2phi1(-1, z; 0; q, q) = sum_n (-1)_n (z)_n q^n / (q)_n, summed directly
    zdeg, order = 6, 10
    res = phi(HypergeometricSpec((MINUS_ONE, Z), (ZERO,), Q), order, zdeg=zdeg)
    expect = bi_zero(zdeg, order)
    for n in range(order):
        c = poch_finite(MINUS_ONE, n, order) * poch_finite(Q, n, order).inverse()
        c = c * monomial(1, n, order) if n else c
        expect = expect + from_qseries(c, zdeg) * z_poch_finite(n, zdeg, order)
    assert res == expect


def test_phi_n0_term_is_constant_one():
    res = phi(HypergeometricSpec((MINUS_ONE, Z), (ZERO,), Q), 10, zdeg=4)
    assert res.coeff(0, 0) == 1
