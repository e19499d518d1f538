import json
import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from knotconc.errors import InvalidSeifertMatrix, IrrationalJumpAngle
from knotconc.exactnum import ZZ, LaurentPoly, Ring, UnitCirclePoint, eval_at_root
from knotconc.seifert import (CATALOG, CORE_CATALOG, EXACT_CATALOG, FIGURE_EIGHT, TREFOIL, UNKNOT, SeifertMatrix,
                              alexander_poly, arf, connected_sum, levine_tristram, lookup, mirror,
                              signature_function, signature_integral, torus_2q)

from oracles import numeric_integral, numeric_signature, numeric_signature_turns, random_seifert, sympy_alexander


def prime_power_points(max_order):
    for q in range(2, max_order + 1):
        if len(sympy.factorint(q)) == 1:
            for r in range(1, q):
                if math.gcd(r, q) == 1:
                    yield UnitCirclePoint(q, r)


# -- Alexander polynomial ---------------------------------------------------


def test_alexander_examples():
    assert alexander_poly(UNKNOT) == LaurentPoly.constant(ZZ, 1)
    assert alexander_poly(TREFOIL) == LaurentPoly(ZZ, [1, -1, 1])
    fig8 = alexander_poly(FIGURE_EIGHT)
    # normalized to a positive value at 1; the textbook form t^2 - 3t + 1 up to a unit
    assert fig8 == LaurentPoly(ZZ, [-1, 3, -1])
    assert fig8 == -LaurentPoly(ZZ, [1, -3, 1])


def test_alexander_mod_p_reduces():
    assert alexander_poly(FIGURE_EIGHT, Ring.mod(3)) == LaurentPoly(Ring.mod(3), [1, 0, 1])
    assert alexander_poly(TREFOIL, Ring.mod(2)) == LaurentPoly(Ring.mod(2), [1, 1, 1])


def _matches_sympy(A):
    """sympy's det(tA - A^T) equals ours up to a unit +-t^k."""
    expr, t = sympy_alexander(A)
    ref = [int(c) for c in sympy.Poly(expr, t).all_coeffs()[::-1]]
    while ref and ref[0] == 0:
        ref.pop(0)
    ours = [int(c) for c in alexander_poly(A).coeffs()]
    return ours in (ref, [-c for c in ref])


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_alexander_matches_sympy(name):
    assert _matches_sympy(CATALOG[name])


def test_alexander_matches_sympy_random():
    rng = random.Random(8)
    for _ in range(20):
        assert _matches_sympy(random_seifert(rng, size=rng.choice([2, 4, 6]), spread=1))


def test_catalog_validity():
    for name, A in CATALOG.items():
        assert A.antisymmetrization_det() in (1, -1), name
        assert A.size % 2 == 0
        assert alexander_poly(A)(1) in (1, -1)


def test_connected_sum_alexander_is_product():
    A = connected_sum(TREFOIL, FIGURE_EIGHT)
    assert alexander_poly(A) == (alexander_poly(TREFOIL) * alexander_poly(FIGURE_EIGHT)).normalized()
    assert connected_sum(TREFOIL, UNKNOT) == TREFOIL
    assert mirror(TREFOIL).entries == ((1, 0), (-1, 1))


# -- Levine-Tristram signatures ---------------------------------------------


def test_levine_tristram_examples():
    assert levine_tristram(TREFOIL, UnitCirclePoint(1, 0)) == 0
    assert levine_tristram(FIGURE_EIGHT, UnitCirclePoint(1, 0)) == 0
    assert levine_tristram(TREFOIL, UnitCirclePoint(2, 1)) == -2
    assert numeric_signature(TREFOIL, math.pi)[0] == -2
    assert levine_tristram(TREFOIL, UnitCirclePoint(6, 1)) == -1
    # numeric cross-check at the singular point: one zero eigenvalue, one negative
    import numpy as np
    from oracles import lt_form

    ev = np.linalg.eigvalsh(lt_form(TREFOIL, math.pi / 3))
    assert sum(ev < -1e-9) == 1 and sum(abs(ev) < 1e-9) == 1


def test_symmetry_random():
    rng = random.Random(1)
    for _ in range(100):
        A = random_seifert(rng, size=rng.choice([2, 4]))
        q = rng.randint(2, 30)
        w = UnitCirclePoint(q, rng.randrange(1, q))
        assert levine_tristram(A, w) == levine_tristram(A, w.conj())


def test_connected_sum_is_additive_pointwise():
    rng = random.Random(2)
    for _ in range(20):
        A, B = random_seifert(rng), random_seifert(rng, size=2)
        S = connected_sum(A, B)
        for q in (3, 5, 7, 8):
            w = UnitCirclePoint(q, 1)
            assert levine_tristram(S, w) == levine_tristram(A, w) + levine_tristram(B, w)


@pytest.mark.parametrize("name", CORE_CATALOG + ("stevedore", "metabolic_31"))
def test_prime_power_points_are_not_alexander_roots(name):
    delta = alexander_poly(lookup(name))
    for w in prime_power_points(32):
        assert not eval_at_root(delta, w).is_zero(), (name, w)


# -- signature step functions -----------------------------------------------


def test_signature_function_examples():
    assert signature_function(UNKNOT).is_zero()
    f = signature_function(TREFOIL)
    assert [p.turns for p in f.jump_points()] == [Fraction(1, 6), Fraction(5, 6)]
    assert f.value_turns(Fraction(1, 12)) == 0
    assert f.value_turns(Fraction(1, 6)) == -1
    assert f.value_turns(Fraction(1, 4)) == -2
    assert f.value_turns(Fraction(1, 2)) == -2
    g = signature_function(torus_2q(5))
    assert g.value_turns(Fraction(1, 2)) == -4
    assert [p.turns for p in g.jump_points()] == [Fraction(1, 10), Fraction(3, 10), Fraction(7, 10), Fraction(9, 10)]


def test_signature_integral_examples():
    assert signature_integral(signature_function(UNKNOT)) == 0
    assert signature_integral(signature_function(TREFOIL)) == Fraction(-4, 3)
    for name in EXACT_CATALOG:
        A = CATALOG[name]
        assert signature_integral(signature_function(connected_sum(A, mirror(A)))) == 0


@pytest.mark.parametrize("name", EXACT_CATALOG)
def test_jump_confinement_and_point_values(name):
    A = CATALOG[name]
    f = signature_function(A)
    for a, b, v in f.arcs():
        for k in (1, 2, 3):
            s = a + (b - a) * Fraction(k, 4)
            assert levine_tristram(A, UnitCirclePoint.from_turns(s)) == v
    for j in f.jumps:
        assert levine_tristram(A, UnitCirclePoint.from_turns(j.lo)) == j.at


@pytest.mark.parametrize("name", ["T2_3", "T2_5", "T2_7", "figure8", "metabolic_31"])
def test_integral_matches_trapezoid(name):
    A = CATALOG[name]
    assert abs(float(signature_integral(signature_function(A))) - numeric_integral(A)) < 1e-3


def test_integral_matches_trapezoid_random():
    rng = random.Random(4)
    done = 0
    while done < 3:
        A = random_seifert(rng)
        try:
            f = signature_function(A)
        except IrrationalJumpAngle:
            continue
        assert abs(float(f.integral()) - numeric_integral(A, 4000)) < 2e-3
        done += 1


def test_arc_values_match_numeric_oracle():
    rng = random.Random(5)
    for name in CORE_CATALOG:
        A = CATALOG[name]
        f = signature_function(A)
        for _ in range(30):
            s = Fraction(rng.randint(1, 999), 1000)
            sig, gap = numeric_signature(A, 2 * math.pi * float(s))
            if gap > 1e-8:
                assert f.value_turns(s) == sig


def test_irrational_jump_angle_sampled_form():
    A = lookup("twist_-2")
    with pytest.raises(IrrationalJumpAngle) as info:
        signature_function(A)
    g = info.value.sampled
    assert g is not None and not g.exact
    with pytest.raises(IrrationalJumpAngle):
        g.integral()
    assert signature_function(A, allow_sampled=True) == g
    for a, b, v in g.arcs():
        s = (a + b) / 2
        assert v == numeric_signature_turns(A, s)


# -- Arf invariant ----------------------------------------------------------


def test_arf_examples():
    assert arf(UNKNOT) == 0
    assert arf(TREFOIL) == 1
    assert arf(FIGURE_EIGHT) == 1


@given(st.sampled_from(sorted(CATALOG)), st.sampled_from(sorted(CATALOG)))
@settings(max_examples=40, deadline=None)
def test_arf_additive(a, b):
    A, B = CATALOG[a], CATALOG[b]
    assert arf(connected_sum(A, B)) == (arf(A) + arf(B)) % 2


# -- JSON -------------------------------------------------------------------


def test_json_round_trip_and_validation(tmp_path):
    p = tmp_path / "k.json"
    p.write_text(json.dumps(TREFOIL.to_json()))
    assert SeifertMatrix.load(p) == TREFOIL
    with pytest.raises(InvalidSeifertMatrix):
        SeifertMatrix.from_json({"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})
    with pytest.raises(InvalidSeifertMatrix):
        SeifertMatrix.from_json({"matrix": [[1, 0], [0, 1]]})
    with pytest.raises(InvalidSeifertMatrix):
        SeifertMatrix.from_json({"name": "x"})
