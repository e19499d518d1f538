import json
import random

import pytest
import sympy

from knotconc.blanchfield import (BlanchfieldValue, blanchfield_pair, delta_mod_p_nontrivial, generates,
                                  is_nonsingular, mod_p_nontrivial, module_from_matrix, module_from_seifert,
                                  presentation_matrix, self_annihilating, smith_normal_form)
from knotconc.errors import SingularPresentation
from knotconc.exactnum import QQ, ZZ, LaurentPoly, Ring
from knotconc.exactnum.smith import laurent_domain, matmul
from knotconc.seifert import (CATALOG, METABOLIC_31, STEVEDORE, TREFOIL, UNKNOT, SeifertMatrix, alexander_poly,
                              connected_sum, mirror)

RINGS = [QQ, Ring.mod(2), Ring.mod(3), Ring.mod(5), Ring.mod(7)]
KNOTS = sorted(n for n in CATALOG if n != "unknot")
T = sympy.symbols("t")


def rand_poly(rng, ring, width=3):
    p = ring.characteristic or 5
    return LaurentPoly(ring, [rng.randrange(-p + 1, p) for _ in range(rng.randint(1, width))], rng.randint(-2, 2))


def rand_vec(rng, ring, n):
    return [rand_poly(rng, ring) for _ in range(n)]


def laurent_to_sympy(p):
    if not isinstance(p, LaurentPoly):
        return sympy.Integer(p)
    return sum((sympy.Rational(c) * T ** e for e, c in p.terms().items()), sympy.Integer(0))


# -- modules ----------------------------------------------------------------


def test_module_examples():
    assert module_from_seifert(UNKNOT, QQ).is_trivial
    m = module_from_seifert(TREFOIL, QQ)
    assert m.is_cyclic and m.invariant_factors == [LaurentPoly(QQ, [1, -1, 1])]
    m3 = module_from_seifert(TREFOIL, Ring.mod(3))
    assert m3.invariant_factors == [LaurentPoly(Ring.mod(3), [1, 2, 1])]  # (t + 1)^2
    assert module_from_seifert(STEVEDORE, Ring.mod(2)).is_trivial
    assert module_from_seifert(METABOLIC_31, QQ).is_cyclic


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag())
def test_invariant_factor_product_is_alexander(ring):
    for name in KNOTS:
        A = CATALOG[name]
        m = module_from_seifert(A, ring)
        assert m.order() == alexander_poly(A, ring).normalized(), name
        U, D, V = m.smith_form()
        dom = laurent_domain(ring)
        assert matmul(matmul(U, D, dom), V, dom) == [list(r) for r in m.P]


@pytest.mark.parametrize("p", [5, 7, 11])
def test_change_of_coefficients(p):
    Zp = Ring.mod(p)
    for name in KNOTS:
        A = CATALOG[name]
        mq, mp = module_from_seifert(A, QQ), module_from_seifert(A, Zp)
        total_q = sum(d.width for d in mq.invariant_factors)
        total_p = sum(d.width for d in mp.invariant_factors)
        assert total_q == total_p
        reduced = mq.order().change_ring(Zp).normalized()
        assert reduced == mp.order()
        # cyclicity can only be lost, never gained, by reduction
        assert len(mp.invariant_factors) >= len(mq.invariant_factors) or mq.order().is_unit()


def test_smith_normal_form_examples():
    one, zero = LaurentPoly.constant(QQ, 1), LaurentPoly(QQ)
    U, D, V = smith_normal_form([[one, zero], [zero, one]], QQ)
    assert D == [[one, zero], [zero, one]]
    a = LaurentPoly(QQ, [-1, 1])
    b = a * LaurentPoly(QQ, [1, 1])
    _, D, _ = smith_normal_form([[a, zero], [zero, b]], QQ)
    assert [D[0][0], D[1][1]] == [a.normalized(), b.normalized()]


def test_json():
    doc = module_from_seifert(TREFOIL, Ring.mod(3)).to_json()
    assert json.loads(json.dumps(doc))["invariant_factors"] == [LaurentPoly(Ring.mod(3), [1, 2, 1]).to_json()]
    v = blanchfield_pair(TREFOIL, QQ, [1, 0], [1, 0])
    assert set(v.to_json()) == {"numerator", "denominator"}


# -- pairing ----------------------------------------------------------------


def test_pairing_examples():
    assert blanchfield_pair(TREFOIL, QQ, [0, 0], [1, 0]).is_zero()
    v = blanchfield_pair(TREFOIL, QQ, [1, 0], [1, 0])
    assert not v.is_zero()
    assert v.scale(LaurentPoly(QQ, [1, -1, 1])).is_zero()
    assert v == BlanchfieldValue(LaurentPoly(QQ, [0, -1]), LaurentPoly(QQ, [1, -1, 1]))


def _sympy_pairing(A, x, y):
    M = sympy.Matrix(A.entries)
    P = T * M - M.T
    xs = sympy.Matrix([laurent_to_sympy(c).subs(T, 1 / T) for c in x])
    ys = sympy.Matrix([laurent_to_sympy(c) for c in y])
    return sympy.cancel((1 - T) * (xs.T * P.inv() * ys)[0, 0])


def _same_class(value, expr):
    """value - expr is a Laurent polynomial."""
    diff = sympy.cancel(laurent_to_sympy(value.num) / laurent_to_sympy(value.den) - expr)
    den = sympy.Poly(sympy.denom(diff), T)
    return den.is_monomial


@pytest.mark.parametrize("name", ["T2_3", "T2_5", "figure8", "stevedore", "metabolic_31"])
def test_pairing_matches_sympy_inverse(name):
    A = CATALOG[name]
    rng = random.Random(hash(name) % 1000)
    n = A.size
    for _ in range(5):
        x, y = rand_vec(rng, QQ, n), rand_vec(rng, QQ, n)
        assert _same_class(blanchfield_pair(A, QQ, x, y), _sympy_pairing(A, x, y))


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag())
def test_pairing_properties(ring):
    rng = random.Random(7)
    for name in KNOTS:
        A = CATALOG[name]
        mod = module_from_seifert(A, ring)
        if mod.is_trivial:
            continue
        n = A.size
        P = presentation_matrix(A, ring)
        pair_count = 50 if name in ("T2_3", "T2_5", "figure8") else 10
        for _ in range(pair_count):
            x, y = rand_vec(rng, ring, n), rand_vec(rng, ring, n)
            bxy = blanchfield_pair(A, ring, x, y)
            assert bxy == blanchfield_pair(A, ring, y, x).conj()
        for _ in range(5):
            x, y, z = (rand_vec(rng, ring, n) for _ in range(3))
            f = rand_poly(rng, ring)
            fx = [f * c for c in x]
            assert blanchfield_pair(A, ring, fx, y) == blanchfield_pair(A, ring, x, y).scale(f.conj())
            xz = [a + b for a, b in zip(x, z)]
            assert blanchfield_pair(A, ring, xz, y) == blanchfield_pair(A, ring, x, y) + blanchfield_pair(A, ring, z, y)
            for j in range(n):
                col = [P[i][j] for i in range(n)]
                shifted = [a + b for a, b in zip(x, col)]
                assert blanchfield_pair(A, ring, shifted, y) == blanchfield_pair(A, ring, x, y)


def test_singular_presentation():
    P = [[LaurentPoly(QQ, [-1, 1]), LaurentPoly(QQ)], [LaurentPoly(QQ), LaurentPoly(QQ)]]
    from knotconc.blanchfield.module import _pairing

    with pytest.raises(SingularPresentation):
        _pairing(module_from_matrix(P, QQ), [1, 0], [1, 0])


# -- predicates -------------------------------------------------------------


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag())
def test_nonsingular_for_catalog(ring):
    for name in sorted(CATALOG):
        assert is_nonsingular(CATALOG[name], ring), name


def test_singular_form_detected():
    # a form that is degenerate on purpose: pairing identically zero on a nontrivial module
    from knotconc.blanchfield.module import _all_units

    t1 = LaurentPoly(QQ, [-1, 1])
    assert not _all_units([[LaurentPoly(QQ), t1]], QQ)


def test_generates_examples():
    assert generates(UNKNOT, QQ, [])
    assert generates(TREFOIL, QQ, [1, 0])
    assert generates(TREFOIL, QQ, [0, 1])
    assert generates(TREFOIL, QQ, [LaurentPoly(QQ, [-1, 1]), 0])
    # t^2 - t + 1 kills the module
    assert not generates(TREFOIL, QQ, [LaurentPoly(QQ, [1, -1, 1]), 0])
    assert not generates(TREFOIL, QQ, [0, 0])
    # the granny knot's module is not cyclic, so nothing generates it
    granny = connected_sum(TREFOIL, TREFOIL)
    assert not generates(granny, QQ, [1, 0, 1, 0])
    # over Z_3 the trefoil module is Z_3[t]/(t+1)^2; (t + 1) e_1 lies in the maximal submodule
    m3 = Ring.mod(3)
    assert generates(TREFOIL, m3, [1, 0])
    x = [LaurentPoly(m3, [1, 1]) * c for c in module_from_seifert(TREFOIL, m3).diagonal_generator(1)]
    assert not generates(TREFOIL, m3, x)


def test_self_annihilating_examples():
    assert self_annihilating(TREFOIL, QQ, [])
    assert not self_annihilating(TREFOIL, QQ, [[1, 0], [0, 1]])
    granny = connected_sum(TREFOIL, TREFOIL)
    # oracle: direct sympy inverse of the 4x4 presentation gives Bl(x + x, x + x) = 2 Bl_T(e1, e1) != 0
    x = [1, 0, 1, 0]
    expr = _sympy_pairing(granny, x, x)
    assert not _same_class(BlanchfieldValue.zero(QQ), expr)
    assert self_annihilating(granny, QQ, [x]) is False
    # the diagonal in T # -T is a metabolizer
    square = connected_sum(TREFOIL, mirror(TREFOIL))
    expr = _sympy_pairing(square, x, x)
    assert sympy.Poly(sympy.denom(sympy.cancel(expr)), T).is_monomial
    assert self_annihilating(square, QQ, [x])


def test_mod_p_nontrivial():
    assert not mod_p_nontrivial(UNKNOT, 2)
    assert mod_p_nontrivial(TREFOIL, 7)
    assert mod_p_nontrivial(TREFOIL, 2)
    # 2t^2 - 3t + 2 reduces to t mod 2, a unit
    delta = LaurentPoly(ZZ, [2, -3, 2])
    assert not delta_mod_p_nontrivial(delta, 2)
    assert delta_mod_p_nontrivial(delta, 3)
    A = SeifertMatrix(((-1, 0), (1, -2)))
    assert alexander_poly(A) == delta
    assert not mod_p_nontrivial(A, 2)
