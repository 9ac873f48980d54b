import random

import pytest
import sympy as sp

from oracles import point_trajectory_oracle, same_ideal, to_sympy

from leafkit import (
    BOUNDED,
    EXACT,
    GF,
    Derivation,
    HasseSchmidtDerivation,
    Ideal,
    Ring,
    diff_closure,
    functoriality_check,
    hs_from_derivation,
    hs_trajectory,
    is_differential_ideal,
    is_hs_invariant,
    trajectory,
)
from leafkit.differential import default_degree_bound
from leafkit.errors import Inconclusive, NotDifferentialMorphism, SignatureMismatch

R = Ring(["x", "y"])
HAM = Derivation(R, ["-2*y", "3*x^2"])


def ideal(*gens, ring=R):
    return Ideal.parse(ring, *gens)


def test_differential_membership():
    assert is_differential_ideal(ideal("x^3 + y^2 - 5"), HAM)
    assert not is_differential_ideal(ideal("x - 1", "y"), HAM)
    assert is_differential_ideal(Ideal(R), HAM)
    assert is_differential_ideal(Ideal(R, [R.one]), HAM)


def test_closure():
    res = diff_closure(ideal("y"), Derivation(R, ["1", "x"]))
    # y, x, 1
    assert res.closure.is_unit()
    res = diff_closure(ideal("x"), Derivation(R, ["x*y", "1"]))
    assert res.closure == ideal("x")
    assert res.rounds == 0


def test_closure_is_least():
    d = Derivation(R, ["y", "-x"])
    c = diff_closure(ideal("x^2 + y^2 - 1", "x"), d).closure
    assert is_differential_ideal(c, d)
    assert c.contains_ideal(ideal("x^2 + y^2 - 1", "x"))


def test_trajectory_of_point_on_level_curve():
    t = trajectory(ideal("x - 1", "y"), HAM)
    assert t.exact and t.status == EXACT
    assert t.candidate == ideal("x^3 + y^2 - 1")
    assert str(t).startswith("<x^3+y^2-1>")


def test_invariant_input_returns_at_once():
    P = ideal("x^3 + y^2 - 2")
    t = trajectory(P, HAM)
    assert t.exact and t.rounds == 0 and t.candidate == P


def test_degree_bound_too_small_is_reported():
    d = Derivation(R, ["1", "x^3"])
    # the orbit through the origin is y = x^4/4, out of reach at degree 2
    t = trajectory(ideal("x", "y"), d, degree_bound=2)
    assert t.candidate == Ideal(R)
    t4 = trajectory(ideal("x", "y"), d, degree_bound=4)
    assert t4.exact and t4.candidate == ideal("4*y - x^4")


def test_bounded_when_rounds_run_out():
    t = trajectory(ideal("x - 1", "y"), HAM, max_rounds=1)
    assert t.status == BOUNDED and not t.exact
    assert ideal("x - 1", "y").contains_ideal(t.candidate)


def test_default_degree_bound():
    assert default_degree_bound(ideal("x", "y")) == 3
    assert default_degree_bound(ideal("x^3 + y^2")) == 5


def test_trajectory_against_pointwise_oracle():
    rng = random.Random(3)
    x, y = sp.symbols("x y")
    fields = [["y", "x"], ["x*y", "1"], ["1 - x*y^2", "x^2 - y^3"], ["x^2", "y"]]
    for images in fields:
        d = Derivation(R, images)
        a, b = rng.randint(-2, 2), rng.randint(-2, 2)
        t = trajectory(ideal(f"x - ({a})", f"y - ({b})"), d)
        assert t.exact
        D = t.degree_bound
        oracle = point_trajectory_oracle([to_sympy(g, (x, y)) for g in d.images], {x: a, y: b}, D, (D + 1) * (D + 2))
        assert same_ideal([to_sympy(g, (x, y)) for g in t.candidate.groebner()], oracle, (x, y))


def test_trajectory_is_contained_and_differential():
    d = Derivation(R, ["y", "x^2"])
    P = ideal("x - 2", "y - 1")
    t = trajectory(P, d)
    assert P.contains_ideal(t.candidate)
    assert is_differential_ideal(t.candidate, d)


def test_ring_mismatch():
    with pytest.raises(SignatureMismatch):
        trajectory(Ideal.parse(Ring(["x"]), "x"), HAM)


def test_hs_trajectory_char_zero_agrees():
    h = hs_from_derivation(HAM, 6)
    t = hs_trajectory(ideal("x - 1", "y"), h)
    assert t.exact and t.truncation == 6
    assert t.candidate == ideal("x^3 + y^2 - 1")
    assert is_hs_invariant(t.candidate, h)


def test_hs_trajectory_char_p():
    F2 = Ring(["x"], GF(2))
    h = HasseSchmidtDerivation(F2, 4, [["1"]])
    # x^2 is a d-constant in char 2 but D_2(x^2) = 1
    t = hs_trajectory(Ideal.parse(F2, "x"), h)
    assert t.candidate == Ideal(F2)
    F5 = Ring(["x", "y"], GF(5))
    h5 = HasseSchmidtDerivation(F5, 4, [["y"], []])
    # points with y = 0 are fixed; elsewhere the orbit is a horizontal line
    assert hs_trajectory(Ideal.parse(F5, "x - 1", "y"), h5).rounds == 0
    t5 = hs_trajectory(Ideal.parse(F5, "x - 1", "y - 1"), h5)
    assert t5.candidate == Ideal.parse(F5, "y - 1")


def test_functoriality_holds():
    T = Ring(["t"])
    rep = functoriality_check(["t", "t^2"], Ideal.parse(T, "t - 1"), Derivation(R, ["1", "2*x"]), Derivation(T, ["1"]))
    assert rep.holds and bool(rep)
    assert rep.pullback_of_trajectory == rep.trajectory_of_pullback == ideal("y - x^2")


def test_functoriality_rejects_non_morphism():
    T = Ring(["t"])
    with pytest.raises(NotDifferentialMorphism):
        functoriality_check(["t", "t"], Ideal.parse(T, "t"), Derivation(R, ["1", "2*x"]), Derivation(T, ["1"]))


def test_functoriality_inconclusive():
    with pytest.raises(Inconclusive):
        functoriality_check(["x", "y"], ideal("x - 1", "y"), HAM, HAM, max_rounds=1)
