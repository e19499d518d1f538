import cmath
import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from knotconc.errors import NonHermitianInput
from knotconc.exactnum import (QQ, ZZ, CyclotomicElement, LaurentPoly, Ring, UnitCirclePoint, certified_sign,
                               eval_at_root, hermitian_signature, poly_from_string)
from knotconc.exactnum.smith import INTEGERS, diagonal, laurent_domain, matmul, smith

T = sympy.symbols("t")


def to_sympy(p: LaurentPoly):
    return sum((sympy.Rational(c) * T ** e for e, c in p.terms().items()), sympy.Integer(0))


coeff_lists = st.lists(st.integers(-9, 9), min_size=0, max_size=7)
lows = st.integers(-4, 4)


# -- rings ------------------------------------------------------------------


def test_ring_parse_and_validation():
    assert Ring.parse("q") == QQ
    assert Ring.parse("Z_5") == Ring.mod(5)
    assert Ring.parse("z3").tag() == "z3"
    with pytest.raises(ValueError):
        Ring.mod(4)
    with pytest.raises(ValueError):
        Ring.parse("r")


# -- Laurent polynomials ----------------------------------------------------


@given(coeff_lists, lows, coeff_lists, lows)
@settings(max_examples=60, deadline=None)
def test_laurent_ring_ops_match_sympy(a, la, b, lb):
    p, q = LaurentPoly(QQ, a, la), LaurentPoly(QQ, b, lb)
    assert sympy.expand(to_sympy(p + q) - (to_sympy(p) + to_sympy(q))) == 0
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert sympy.expand(to_sympy(p.conj()) - to_sympy(p).subs(T, 1 / T)) == 0


@given(coeff_lists, lows)
@settings(max_examples=60, deadline=None)
def test_no_stored_zero_coefficients(a, low):
    p = LaurentPoly(ZZ, a, low)
    if p.is_zero():
        assert p.coeffs() == []
    else:
        assert p.coeffs()[0] != 0 and p.coeffs()[-1] != 0


@given(coeff_lists, lows, coeff_lists, lows)
@settings(max_examples=60, deadline=None)
def test_euclidean_division_over_field(a, la, b, lb):
    p, q = LaurentPoly(Ring.mod(7), a, la), LaurentPoly(Ring.mod(7), b, lb)
    if q.is_zero():
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.width < q.width


def test_normalization_rules():
    fig8 = LaurentPoly(ZZ, [1, -3, 1], 3)
    assert fig8.normalized() == LaurentPoly(ZZ, [-1, 3, -1])
    assert fig8.normalized()(1) == 1
    assert LaurentPoly(QQ, [Fraction(1, 2), Fraction(-3, 2)], -2).normalized() == LaurentPoly(QQ, [-1, 3])
    z5 = LaurentPoly(Ring.mod(5), [1, 3], 2).normalized()
    assert z5.leading_coefficient() == 1 and z5.low == 0
    u = LaurentPoly(QQ, [2, 4], -1)
    assert u.unit_part() * u.normalized() == u


def test_residue_handles_negative_exponents():
    m = LaurentPoly(QQ, [1, -1, 1])
    x = LaurentPoly.monomial(QQ, -1)
    r = x.residue(m)
    assert (r * LaurentPoly.t(QQ) - 1).residue(m).is_zero()


def test_poly_from_string():
    assert poly_from_string(ZZ, "t^2 - 3t + 1") == LaurentPoly(ZZ, [1, -3, 1])
    assert poly_from_string(QQ, "2*t^-1 + 1/2") == LaurentPoly(QQ, [2, Fraction(1, 2)], -1)
    assert poly_from_string(ZZ, "-t") == LaurentPoly(ZZ, [-1], 1)


def test_json_round_trip():
    p = LaurentPoly(QQ, [Fraction(1, 3), 0, -2], -1)
    assert LaurentPoly.from_json(QQ, p.to_json()) == p


# -- unit circle points and cyclotomic arithmetic --------------------------


def test_unit_circle_point_normal_form():
    w = UnitCirclePoint(12, 8)
    assert (w.order, w.numerator) == (3, 2)
    assert w.conj() == UnitCirclePoint(3, 1)
    assert UnitCirclePoint(5, 0) == UnitCirclePoint(1, 0)
    assert UnitCirclePoint.parse("-1") == UnitCirclePoint(2, 1)
    assert UnitCirclePoint(8, 3).is_prime_power_order() and not UnitCirclePoint(6, 1).is_prime_power_order()
    assert UnitCirclePoint(1, 0).is_prime_power_order()


def test_eval_at_root_examples():
    w6 = UnitCirclePoint(6, 1)
    assert eval_at_root(LaurentPoly.constant(ZZ, 1), w6) == CyclotomicElement.rational(1, 1)
    assert eval_at_root(LaurentPoly(ZZ, [1, -1, 1]), w6).is_zero()
    assert eval_at_root(LaurentPoly(ZZ, [-1, 1]), UnitCirclePoint(1, 0)).is_zero()
    with pytest.raises(ValueError):
        eval_at_root(LaurentPoly(Ring.mod(3), [1, 1]), w6)


def test_eval_at_root_matches_100_digit_evaluation():
    rng = random.Random(7)
    for _ in range(200):
        deg = rng.randint(0, 12)
        p = LaurentPoly(ZZ, [rng.randint(-20, 20) for _ in range(deg + 1)], rng.randint(-6, 6))
        q = rng.randint(1, 60)
        w = UnitCirclePoint(q, rng.randrange(q))
        exact = eval_at_root(p, w).to_complex(100)
        with mpmath.workdps(100):
            z = mpmath.expjpi(2 * mpmath.mpf(w.numerator) / w.order)
            ref = sum((int(c) * z ** e for e, c in p.terms().items()), mpmath.mpc(0))
            assert abs(exact - ref) < mpmath.mpf(10) ** -50


def test_cyclotomic_field_operations():
    z = CyclotomicElement.zeta(12)
    x = z + z.conj()
    assert x.is_real()
    assert (x * x.inverse()) == CyclotomicElement.rational(12, 1)
    a = CyclotomicElement.zeta(4) + CyclotomicElement.zeta(3)  # mixed conductors lift to 12
    assert a.conductor == 12
    assert abs(complex(a.to_complex(20)) - (1j + cmath.exp(2j * cmath.pi / 3))) < 1e-12


def test_certified_sign_examples():
    z6, z3 = CyclotomicElement.zeta(6), CyclotomicElement.zeta(3)
    assert certified_sign(z6 + z6.conj()) == 1
    assert certified_sign(z3 + z3.conj()) == -1
    assert certified_sign(CyclotomicElement.rational(5, 0)) == 0
    tiny = (CyclotomicElement.zeta(7) + CyclotomicElement.zeta(7).conj()) - CyclotomicElement.rational(7, Fraction(1246979603717467, 10**15))
    assert certified_sign(tiny) == (1 if 2 * cmath.cos(2 * cmath.pi / 7).real > 1.246979603717467 else -1)


def test_certified_sign_agrees_with_interval_evaluation():
    rng = random.Random(3)
    iv = mpmath.iv
    iv.dps = 100
    for _ in range(100):
        q = rng.choice([5, 7, 8, 9, 12, 15, 16])
        x = CyclotomicElement.rational(q, rng.randint(-3, 3))
        for k in range(1, q):
            c = rng.randint(-3, 3)
            x = x + (CyclotomicElement.zeta(q, k) + CyclotomicElement.zeta(q, -k)) * c
        lo_hi = sum((iv.mpf(c.numerator) / c.denominator * iv.cos(2 * iv.pi * k / q)
                      for k, c in enumerate(x.coords())), iv.mpf(0))
        if lo_hi.a > 0:
            assert certified_sign(x) == 1
        elif lo_hi.b < 0:
            assert certified_sign(x) == -1


# -- hermitian signatures ---------------------------------------------------


def _cyc_matrix(rows, q=1):
    return [[x if isinstance(x, CyclotomicElement) else CyclotomicElement.rational(q, x) for x in r] for r in rows]


def test_hermitian_signature_examples():
    assert hermitian_signature(_cyc_matrix([[1, 0], [0, 1]])) == 2
    assert hermitian_signature(_cyc_matrix([[0, 1], [1, 0]])) == 0
    assert hermitian_signature(_cyc_matrix([[-4, 2], [2, -4]])) == -2  # trefoil at w = -1
    with pytest.raises(NonHermitianInput):
        hermitian_signature(_cyc_matrix([[0, 1], [2, 0]]))


def _random_hermitian(rng, n, q):
    M = [[None] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = CyclotomicElement.rational(q, rng.randint(-3, 3))
        for k in range(1, q // 2 + 1):
            if rng.random() < 0.5:
                c = rng.randint(-2, 2)
                M[i][i] = M[i][i] + (CyclotomicElement.zeta(q, k) + CyclotomicElement.zeta(q, -k)) * c
        for j in range(i + 1, n):
            x = CyclotomicElement.rational(q, rng.randint(-2, 2))
            for k in range(q):
                if rng.random() < 0.3:
                    x = x + CyclotomicElement.zeta(q, k) * rng.randint(-2, 2)
            M[i][j], M[j][i] = x, x.conj()
    return M


def _numeric(M):
    return np.array([[complex(x.to_complex(30)) for x in row] for row in M])


def test_hermitian_signature_matches_eigenvalues_and_symmetries():
    rng = random.Random(11)
    checked = 0
    for _ in range(40):
        n, q = rng.randint(1, 5), rng.choice([3, 4, 5, 8, 9])
        M = _random_hermitian(rng, n, q)
        ev = np.linalg.eigvalsh(_numeric(M))
        s = hermitian_signature(M)
        assert hermitian_signature([[-x for x in row] for row in M]) == -s
        if np.min(np.abs(ev)) > 1e-8:
            assert s == int(np.sum(ev > 0) - np.sum(ev < 0))
            checked += 1
        N = _random_hermitian(rng, 2, q)
        zero = CyclotomicElement.rational(q, 0)
        block = [row + [zero] * 2 for row in M] + [[zero] * n + row for row in N]
        assert hermitian_signature(block) == s + hermitian_signature(N)
    assert checked > 20


# -- Smith normal form ------------------------------------------------------


def test_smith_examples():
    dom = laurent_domain(QQ)
    one, zero = dom.one, dom.zero
    _, _, D, _, _ = smith([[one, zero], [zero, one]], dom)
    assert diagonal(D) == [one, one]
    a = LaurentPoly(QQ, [-1, 1])
    b = a * LaurentPoly(QQ, [1, 1])
    _, _, D, _, _ = smith([[a, zero], [zero, b]], dom)
    assert diagonal(D) == [a.normalized(), b.normalized()]


def test_smith_random_z5_reconstructs():
    rng = random.Random(5)
    Z5 = Ring.mod(5)
    dom = laurent_domain(Z5)
    for _ in range(15):
        M = [[LaurentPoly(Z5, [rng.randrange(5) for _ in range(4)], rng.randint(-1, 1)) for _ in range(3)]
             for _ in range(3)]
        L, Linv, D, R, Rinv = smith(M, dom)
        assert matmul(matmul(Linv, D, dom), Rinv, dom) == M
        assert matmul(matmul(L, M, dom), R, dom) == D
        for X, Y in ((L, Linv), (R, Rinv)):
            assert matmul(X, Y, dom) == [[dom.one if i == j else dom.zero for j in range(3)] for i in range(3)]
        d = diagonal(D)
        assert all(d[i].divides(d[i + 1]) for i in range(2))


def test_smith_integers_match_sympy():
    from sympy.matrices.normalforms import smith_normal_form

    rng = random.Random(9)
    for _ in range(30):
        M = [[rng.randint(-8, 8) for _ in range(3)] for _ in range(4)]
        _, _, D, _, _ = smith(M, INTEGERS)
        ref = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
        assert [abs(x) for x in diagonal(D)] == [abs(ref[i, i]) for i in range(3)]
