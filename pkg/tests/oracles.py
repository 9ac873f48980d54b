"""Reference computations done with sympy, independent of the leafkit engine."""

from __future__ import annotations

import sympy as sp


def to_sympy(p, symbols=None):
    """leafkit Poly -> sympy expression, through the printed form."""
    names = p.ring.names
    symbols = symbols or sp.symbols(names)
    if not isinstance(symbols, (list, tuple)):
        symbols = (symbols,)
    return sp.sympify(str(p).replace("^", "**"), locals=dict(zip(names, symbols)))


def sympy_groebner(exprs, gens, modulus=None):
    exprs = [e for e in exprs if sp.expand(e) != 0]
    if not exprs:
        return []
    # force a field so the reduced basis is monic either way
    kw = {"modulus": modulus} if modulus else {"domain": "QQ"}
    G = sp.groebner(exprs, *gens, order="grevlex", **kw)
    return sorted((sp.expand(g) for g in G.exprs), key=sp.default_sort_key)


def same_ideal(ours, theirs, gens, modulus=None) -> bool:
    return sympy_groebner(ours, gens, modulus) == sympy_groebner(theirs, gens, modulus)


def monomials(gens, degree):
    out = []
    for d in range(degree + 1):
        out.extend(sorted(sp.itermonomials(gens, d, d), key=sp.default_sort_key))
    return out


def point_trajectory_oracle(field, point, degree, depth):
    """Generators of {f : deg f <= degree, f^(k)(point) = 0 for k <= depth}.

    ``field`` lists the images of the variables; the trajectory of a maximal
    ideal is read off pointwise because f^(k) lies in it iff it vanishes there.
    """
    gens = list(point)  # ordered {symbol: value}
    subs = dict(point)
    mons = monomials(gens, degree)
    cols = []
    for m in mons:
        f = sp.Poly(m, *gens)
        col = []
        for _ in range(depth + 1):
            col.append(f.eval(subs))
            f = sum((f.diff(g) * sp.Poly(field[i], *gens) for i, g in enumerate(gens)), sp.Poly(0, *gens))
        cols.append(col)
    M = sp.Matrix(depth + 1, len(mons), lambda k, j: cols[j][k])
    basis = M.nullspace()
    return [sp.expand(sum(c * m for c, m in zip(v, mons))) for v in basis]


def brute_membership(f, gens_exprs, variables, degree):
    """f in <gens> decided by linear algebra on monomial multiples up to ``degree``."""
    mons = monomials(variables, degree)
    rows = []
    for g in gens_exprs:
        gd = sp.Poly(g, *variables).total_degree()
        for m in monomials(variables, degree - gd):
            rows.append(sp.Poly(sp.expand(m * g), *variables))
    target = sp.Poly(f, *variables)
    index = {sp.Poly(m, *variables).monoms()[0]: i for i, m in enumerate(mons)}

    def vec(p):
        v = [0] * len(mons)
        for mon, c in p.terms():
            if mon not in index:
                return None
            v[index[mon]] = c
        return v

    tv = vec(target)
    if tv is None:
        return None
    A = sp.Matrix([vec(r) for r in rows]).T if rows else sp.zeros(len(mons), 0)
    if A.cols == 0:
        return all(c == 0 for c in tv)
    aug = A.row_join(sp.Matrix(tv))
    return A.rank() == aug.rank()


def hasse_oracle(field, f, order, gens):
    """[d^i f / i! for i <= order] with sympy differentiation."""
    field = [sp.Poly(v, *gens, domain="QQ") for v in field]
    cur = sp.Poly(f, *gens, domain="QQ")
    out = [cur.as_expr()]
    for i in range(1, order + 1):
        cur = sum((cur.diff(g) * field[k] for k, g in enumerate(gens)), sp.Poly(0, *gens, domain="QQ"))
        out.append((cur * sp.Rational(1, sp.factorial(i))).as_expr())
    return out


def charpoly_factor_degrees(matrix, modulus=None):
    """(roots in the base field, degrees of the non-linear irreducible factors)."""
    t = sp.Symbol("t")
    M = sp.Matrix(matrix)
    cp = M.charpoly(t).as_expr()
    if modulus:
        P = sp.Poly(cp, t, modulus=modulus)
    else:
        P = sp.Poly(cp, t, domain="QQ")
    _, factors = P.factor_list()
    roots = set()
    nonlinear = []
    for fac, mult in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            r = -b / a if not modulus else (-int(b) * pow(int(a), -1, modulus)) % modulus
            roots.add(sp.Rational(r) if not modulus else r)
        else:
            nonlinear.extend([fac.degree()] * mult)
    return roots, sorted(nonlinear)
