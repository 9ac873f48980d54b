import random

import pytest
import sympy as sp

from oracles import brute_membership, same_ideal, sympy_groebner, to_sympy

from leafkit import (
    GF,
    Ideal,
    Ring,
    elimination_ideal,
    groebner_basis,
    ideal_intersect,
    ideal_membership,
    lift,
    normal_form,
    preimage,
    radical_membership,
    saturation,
)
from leafkit.algebra import LEX
from leafkit.groebner import s_polynomial, same_radical

R = Ring(["x", "y"])
R3 = Ring(["x", "y", "z"])
X, Y, Z = sp.symbols("x y z")


def ideal(ring, *gens):
    return Ideal.parse(ring, *gens)


def random_ideal(rng, ring, n):
    mons = ["1", "x", "y", "x^2", "x*y", "y^2", "x^3", "y^3"]
    gens = []
    for _ in range(n):
        terms = [f"({rng.randint(-3, 3)})*{m}" for m in mons if rng.random() < 0.4] or ["x"]
        gens.append("+".join(terms))
    return ideal(ring, *gens)


def test_buchberger_criterion():
    rng = random.Random(1)
    for _ in range(15):
        I = random_ideal(rng, R, 3)
        G = groebner_basis(I)
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                assert not I.reduce(s_polynomial(G[i], G[j]))


@pytest.mark.parametrize("modulus", [None, 5])
def test_matches_sympy(modulus):
    rng = random.Random(2)
    ring = R if modulus is None else Ring(["x", "y"], GF(modulus))
    for _ in range(15):
        I = random_ideal(rng, ring, 3)
        ours = [to_sympy(g, (X, Y)) for g in groebner_basis(I)]
        theirs = [to_sympy(g, (X, Y)) for g in I.gens]
        assert same_ideal(ours, theirs, (X, Y), modulus)


def test_reduced_basis_is_canonical():
    I = ideal(R, "x^2 - y", "x*y - 1")
    J = ideal(R, "x*y - 1", "x^2 - y", "x^3 - x*y")
    assert groebner_basis(I) == groebner_basis(J)
    assert I == J


def test_membership_against_linear_algebra():
    I = ideal(R, "x^2 + y^2 - 1", "x - y")
    gens = [to_sympy(g, (X, Y)) for g in I.gens]
    for text in ["2*y^2 - 1", "x^3 - y^3", "x + 1", "x*y - y^2", "x^2 - 1/2"]:
        f = R.parse(text)
        assert ideal_membership(f, I) == brute_membership(to_sympy(f, (X, Y)), gens, (X, Y), 4)


def test_lift_reconstructs():
    I = ideal(R, "x^2 - y", "x*y - 1")
    f = R.parse("(x + 1)*(x^2 - y) + y^2*(x*y - 1)")
    cof = lift(f, I)
    assert cof is not None
    assert sum((c * g for c, g in zip(cof, I.gens)), R.zero) == f
    assert lift(R.parse("x"), I) is None


def test_normal_form_lex():
    I = ideal(R, "x - y^2")
    assert normal_form(R.parse("x^2"), I, LEX) == R.parse("y^4")


def test_elimination():
    I = ideal(R3, "x - y^2", "z - y^3")
    E = elimination_ideal(I, ["x", "z"])
    ring = E.ring
    assert E == Ideal.parse(ring, "x^3 - z^2")


def test_intersection():
    I, J = ideal(R, "x"), ideal(R, "y")
    assert ideal_intersect(I, J) == ideal(R, "x*y")
    K = ideal_intersect(ideal(R, "x", "y"), ideal(R, "x - 1", "y"))
    assert K == ideal(R, "y", "x^2 - x")


def test_saturation_and_radical():
    I = ideal(R, "x^2*y", "x^3")
    assert saturation(I, R.parse("x")) == Ideal(R, [R.one])
    assert saturation(ideal(R, "x*y"), R.parse("x")) == ideal(R, "y")
    assert radical_membership(R.parse("x"), I)
    assert not radical_membership(R.parse("y"), I)
    assert same_radical(ideal(R, "x^2"), ideal(R, "x"))


def test_preimage():
    T = Ring(["t"])
    # k[x, y] -> k[t], x -> t, y -> t^2
    P = preimage(["t", "t^2"], R, Ideal.parse(T, "t - 2"))
    assert P == ideal(R, "x - 2", "y - 4")
    K = preimage(["t", "t^2"], R, Ideal(T))
    assert K == ideal(R, "y - x^2")


def test_zero_and_unit_ideals():
    assert Ideal(R).is_zero()
    assert ideal(R, "x", "x + 1").is_unit()
    assert sympy_groebner([to_sympy(g, (X, Y)) for g in ideal(R, "x", "x+1").groebner()], (X, Y)) == [1]
