import random

import pytest

from leafkit import (
    GF,
    QQ,
    Derivation,
    Ideal,
    OpenSet,
    Ring,
    cf_topology_laws,
    greatest_invariant_closed,
    is_invariant_open,
    is_leaf,
    make_affine,
    projective_field_from_matrix,
    projective_rational_leaves,
    u_delta,
)
from leafkit.errors import NotDescending, RelationsNotContained
from leafkit.groebner import same_radical
from leafkit.schemes import characteristic_polynomial, roots_with_multiplicity

R = Ring(["x", "y"])
A1 = Ring(["x"])


def ideal(*gens, ring=R):
    return Ideal.parse(ring, *gens)


def test_relations_must_be_stable():
    d = Derivation(R, ["1", "0"])
    with pytest.raises(NotDescending):
        make_affine(R, ideal("x"), d)
    X = make_affine(R, ideal("y"), d)
    assert X.relations == ideal("y")


def test_leaf_on_a_quotient():
    ham = Derivation(R, ["-2*y", "3*x^2"])
    C = make_affine(R, ideal("x^3 + y^2 - 1"), ham)
    assert is_leaf(C, ideal("x^3 + y^2 - 1"))
    assert not is_leaf(C, ideal("x - 1", "y"))
    with pytest.raises(RelationsNotContained):
        is_leaf(C, ideal("x", "y"))


def test_singular_point_is_a_leaf():
    ham = Derivation(R, ["-2*y", "3*x^2"])
    X = make_affine(R, None, ham)
    assert is_leaf(X, ideal("x", "y"))


def test_open_set_order_and_equality():
    X = make_affine(R, None, Derivation(R, ["x", "y"]))
    Dx, Dxy = X.basic_open("x"), X.basic_open("x*y")
    assert Dxy <= Dx and not Dx <= Dxy
    assert X.basic_open("x^2") == Dx
    assert Dx.union(X.basic_open("y")) == OpenSet(X, ideal("x", "y"))
    assert Dx.intersection(X.basic_open("y")) == Dxy
    assert X.whole().is_whole() and X.empty().is_empty()
    assert str(Dx) == "D(x)"


def test_u_delta():
    line = make_affine(A1, None, Derivation(A1, ["1"]))
    # any nonempty open set flows out to the whole line
    assert u_delta(line, line.basic_open("x")).is_whole()
    radial = make_affine(A1, None, Derivation(A1, ["x"]))
    # the origin is the only invariant closed point and D(x - 1) already contains it
    assert u_delta(radial, radial.basic_open("x - 1")).is_whole()
    assert u_delta(radial, radial.basic_open("x")) == radial.basic_open("x")
    assert is_invariant_open(radial, radial.basic_open("x"))
    assert not is_invariant_open(radial, radial.basic_open("x - 1"))


def test_u_delta_is_least_invariant():
    X = make_affine(R, None, Derivation(R, ["x", "-y"]))
    U = X.basic_open("x + y")
    V = u_delta(X, U)
    assert U <= V and is_invariant_open(X, V)
    # D(x*y) misses the axes, which are invariant; D(x) u D(y) contains U
    assert V == OpenSet(X, ideal("x", "y"))


def test_greatest_invariant_closed():
    X = make_affine(R, None, Derivation(R, ["x", "-y"]))
    F = greatest_invariant_closed(X, ideal("x - 1", "y"))
    assert F.ideal.is_unit()
    G = greatest_invariant_closed(X, ideal("x*y", "y^2"))
    assert same_radical(G.ideal, ideal("y"))


def test_cf_laws_on_random_families():
    rng = random.Random(11)
    X = make_affine(R, None, Derivation(R, ["y", "x"]))
    for _ in range(5):
        fam = [X.basic_open(f"x + ({rng.randint(-2, 2)})*y + ({rng.randint(-2, 2)})") for _ in range(3)]
        rep = cf_topology_laws(X, fam)
        assert rep.holds and rep.size == 3
    assert cf_topology_laws(X, []).holds


def test_charts_are_compatible():
    V = projective_field_from_matrix(QQ, 2, [[1, 2, 0], [0, 3, 1], [1, 0, 1]])
    assert V.compatibility_failures() == []
    assert V.chart(0).ring.names == ("u1", "u2")


def test_characteristic_polynomial():
    chi = characteristic_polynomial(QQ, [[QQ(2), QQ(1)], [QQ(0), QQ(3)]])
    assert chi == chi.ring.parse("t^2 - 5*t + 6")
    roots, rest = roots_with_multiplicity(chi)
    assert sorted(roots) == [2, 3]


def test_rational_leaves():
    V = projective_field_from_matrix(QQ, 1, [[1, 0], [0, 2]])
    rep = projective_rational_leaves(V)
    assert [str(p) for p in rep.leaves] == ["[1:0]", "[0:1]"]
    assert rep.ok and rep.residual_degree == 0


def test_rotation_has_no_rational_leaf():
    rep = projective_rational_leaves(projective_field_from_matrix(QQ, 1, [[0, -1], [1, 0]]))
    assert rep.leaves == () and rep.residual_degree == 2 and rep.residual_irreducible
    assert "extension of degree 2" in rep.describe()
    # over GF(5), -1 is a square
    rep5 = projective_rational_leaves(projective_field_from_matrix(GF(5), 1, [[0, 4], [1, 0]]))
    assert len(rep5.leaves) == 2 and rep5.residual_degree == 0


def test_scalar_matrix_gives_every_basis_point():
    rep = projective_rational_leaves(projective_field_from_matrix(QQ, 2, [[3, 0, 0], [0, 3, 0], [0, 0, 3]]))
    assert len(rep.leaves) == 3 and all(p.verified for p in rep.leaves)
