"""Groebner bases and the ideal operations built on them.

Buchberger's algorithm with the Gebauer-Moeller pair criteria, normal pair
selection and monic normalization.  Optionally every basis element carries
its cofactors with respect to the input generators, which is how membership
certificates are produced.
"""

from __future__ import annotations

from .algebra.orders import DEGREVLEX, LEX, MonomialOrder, block_order
from .algebra.poly import Poly, Ring
from .errors import SignatureMismatch

__all__ = [
    "DEGREVLEX",
    "LEX",
    "MonomialOrder",
    "block_order",
    "Ideal",
    "groebner_basis",
    "normal_form",
    "ideal_membership",
    "elimination_ideal",
    "ideal_intersect",
    "saturation",
    "radical_membership",
    "preimage",
    "lift",
    "s_polynomial",
]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Elem:
    """Basis element during the computation: monic polynomial plus optional cofactors."""

    __slots__ = ("poly", "lm", "cof")

    def __init__(self, poly, lm, cof=None):
        self.poly = poly
        self.lm = lm
        self.cof = cof


def _reduce(f: Poly, basis, order, cof=None, full=True):
    """Remainder of ``f`` by monic ``basis`` elements; returns (remainder, cofactors).

    ``cof`` tracks f as a combination of the original generators; it is
    updated alongside the division when given.
    """
    ring = f.ring
    dom = ring.domain
    p = ring.characteristic
    key = order.key
    kcache = {}

    def k(m):
        v = kcache.get(m)
        if v is None:
            v = kcache[m] = key(m)
        return v

    work = dict(f.terms)
    rem = {}
    cof = list(cof) if cof is not None else None
    while work:
        lm = max(work, key=k)
        c = work[lm]
        for g in basis:
            if _divides(g.lm, lm):
                q = _sub(lm, g.lm)
                for e, gc in g.poly.terms.items():
                    ne = tuple([a + b for a, b in zip(e, q)])
                    v = work.get(ne, 0) - c * gc
                    if p:
                        v %= p
                    if v:
                        work[ne] = v
                    else:
                        work.pop(ne, None)
                if cof is not None:
                    for i, gci in enumerate(g.cof):
                        if gci:
                            cof[i] = cof[i] - gci.mul_term(q, c)
                break
        else:
            rem[lm] = c
            del work[lm]
            if not full:
                rem.update(work)
                break
    return Poly(ring, rem), cof


def s_polynomial(f: Poly, g: Poly, order=DEGREVLEX) -> Poly:
    lf, cf = f.leading_term(order)
    lg, cg = g.leading_term(order)
    m = _lcm(lf, lg)
    dom = f.ring.domain
    return f.mul_term(_sub(m, lf), dom.inv(cf)) - g.mul_term(_sub(m, lg), dom.inv(cg))


def _make_elem(poly, order, cof=None):
    lm, lc = poly.leading_term(order)
    inv = poly.ring.domain.inv(lc)
    if inv != 1:
        poly = poly.scale(inv)
        if cof is not None:
            cof = [c.scale(inv) for c in cof]
    return _Elem(poly, lm, cof)


def _update(G, pairs, h, order):
    """Gebauer-Moeller installation of ``h`` into basis ``G`` with pair set ``pairs``."""
    key = order.key
    lh = h.lm
    n = len(G)
    # Candidate new pairs (i, n) with their lcms
    cand = {i: _lcm(G[i].lm, lh) for i in range(n) if G[i] is not None}
    # Chain criterion among new pairs: drop (i, n) if some lcm(j, n) properly divides lcm(i, n)
    kept = {}
    items = sorted(cand.items(), key=lambda t: key(t[1]))
    for i, m in items:
        coprime = all(a == 0 or b == 0 for a, b in zip(G[i].lm, lh))
        dominated = any(_divides(m2, m) and m2 != m for j, m2 in cand.items() if j != i)
        if dominated:
            continue
        same = [j for j, m2 in kept.items() if m2 == m]
        if same:
            # keep one representative per lcm; drop all if any is coprime
            if coprime:
                kept[same[0]] = None
            continue
        kept[i] = None if coprime else m
    new_pairs = {(i, n): m for i, m in kept.items() if m is not None}
    # Old pairs (i, j): drop if lh divides lcm(i, j) strictly w.r.t. both new lcms
    old = {}
    for (i, j), m in pairs.items():
        if _divides(lh, m) and cand.get(i) != m and cand.get(j) != m:
            continue
        old[(i, j)] = m
    old.update(new_pairs)
    G.append(h)
    return old


def _buchberger(polys, order, track=False):
    if not polys:
        return []
    ring = polys[0].ring
    m = len(polys)
    G = []
    pairs = {}
    for idx, f in enumerate(polys):
        if not f:
            continue
        cof = None
        if track:
            cof = [ring.zero] * m
            cof[idx] = ring.one
        e = _make_elem(f, order, cof)
        # reduce against current basis to keep things small
        active = [g for g in G if g is not None]
        r, rc = _reduce(e.poly, active, order, e.cof)
        if not r:
            continue
        e = _make_elem(r, order, rc)
        pairs = _update(G, pairs, e, order)
    key = order.key
    while pairs:
        (i, j), lcm = min(pairs.items(), key=lambda t: (key(t[1]), t[0]))
        del pairs[(i, j)]
        gi, gj = G[i], G[j]
        qi, qj = _sub(lcm, gi.lm), _sub(lcm, gj.lm)
        one = ring.domain.one
        s = gi.poly.mul_term(qi, one) - gj.poly.mul_term(qj, one)
        scof = None
        if track:
            scof = [a.mul_term(qi, one) - b.mul_term(qj, one) for a, b in zip(gi.cof, gj.cof)]
        active = [g for g in G if g is not None]
        r, rc = _reduce(s, active, order, scof)
        if r:
            e = _make_elem(r, order, rc)
            pairs = _update(G, pairs, e, order)
    return [g for g in G if g is not None]


def _reduced(G, order):
    """Minimalize then interreduce a Groebner basis; sorted by increasing leading monomial."""
    key = order.key
    G = sorted(G, key=lambda g: key(g.lm))
    minimal = []
    for g in G:
        if not any(_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        # leading term is untouched; reduce the tail only
        lead = Poly(g.poly.ring, {g.lm: g.poly.terms[g.lm]})
        tail = g.poly - lead
        r, rc = _reduce(tail, others, order, g.cof)
        out.append(_Elem(lead + r, g.lm, rc))
    return out


def _groebner(polys, order, track=False):
    G = _reduced(_buchberger(polys, order, track), order)
    if any(not any(g.lm) for g in G):
        unit = next(g for g in G if not any(g.lm))
        return [unit]
    return G


class Ideal:
    """An ideal given by generators, with cached reduced Groebner bases per order.

    Equality is ideal equality (mutual membership), so ideals are unhashable.
    """

    __hash__ = None

    def __init__(self, ring: Ring, gens=()):
        gens = tuple(ring(g) for g in gens)
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        self._gb = {}
        self._basis_elems = {}

    @classmethod
    def parse(cls, ring: Ring, *texts):
        return cls(ring, [ring.parse(t) for t in texts])

    def __repr__(self):
        return f"Ideal({self}, {self.ring!r})"

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.gens) + ">" if self.gens else "<0>"

    def canonical(self) -> str:
        """The reduced degrevlex basis, printed; identical for equal ideals."""
        gb = self.groebner()
        return "<" + ", ".join(str(g) for g in reversed(gb)) + ">" if gb else "<0>"

    # -- Groebner data --------------------------------------------------
    def groebner(self, order: MonomialOrder = DEGREVLEX):
        gb = self._gb.get(order)
        if gb is None:
            gb = tuple(e.poly for e in _groebner(list(self.gens), order))
            self._gb[order] = gb
        return gb

    def reduce(self, f: Poly, order: MonomialOrder = DEGREVLEX) -> Poly:
        f = self.ring(f)
        basis = self._basis_elems.get(order)
        if basis is None:
            basis = [_Elem(g, g.leading_monomial(order)) for g in self.groebner(order)]
            self._basis_elems[order] = basis
        return _reduce(f, basis, order)[0]

    def contains(self, f: Poly) -> bool:
        f = self.ring(f)
        if not f:
            return True
        if not self.gens:
            return False
        return not self.reduce(f)

    __contains__ = contains

    def contains_ideal(self, other: Ideal) -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def __le__(self, other: Ideal) -> bool:
        return other.contains_ideal(self)

    def __ge__(self, other: Ideal) -> bool:
        return self.contains_ideal(other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.contains_ideal(other) and other.contains_ideal(self)

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gens

    def max_degree(self) -> int:
        return max((g.degree() for g in self.gens), default=0)

    def _check(self, other):
        if other.ring != self.ring:
            raise SignatureMismatch(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other: Ideal) -> Ideal:
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: Ideal) -> Ideal:
        self._check(other)
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def with_gens(self, extra) -> Ideal:
        return Ideal(self.ring, self.gens + tuple(extra))


def groebner_basis(I: Ideal, order: MonomialOrder = DEGREVLEX):
    return list(I.groebner(order))


def normal_form(f: Poly, I: Ideal, order: MonomialOrder = DEGREVLEX) -> Poly:
    return I.reduce(f, order)


def ideal_membership(f: Poly, I: Ideal) -> bool:
    return I.contains(f)


def lift(f: Poly, I: Ideal, order: MonomialOrder = DEGREVLEX):
    """Cofactors ``c`` with ``f = sum c_i * I.gens[i]``, or None if f is not in I."""
    ring = I.ring
    f = ring(f)
    gens = list(I.gens)
    if not gens:
        return [] if not f else None
    G = _groebner(gens, order, track=True)
    r, cof = _reduce(f, G, order, [ring.zero] * len(gens))
    if r:
        return None
    # the tracked combination is f - sum(q_i g_i) = 0 written as -sum(q_i g_i)
    return [-c for c in cof]


def _fresh(ring: Ring, stem: str) -> str:
    name = stem
    k = 0
    while ring.has_var(name):
        k += 1
        name = f"{stem}{k}"
    return name


def _eliminate_leading(polys, big: Ring, n_elim: int, target: Ring):
    order = block_order(n_elim)
    gb = _groebner([p for p in polys if p], order)
    keep = []
    for g in gb:
        if not any(any(e[:n_elim]) for e in g.poly.terms):
            keep.append(g.poly.to_ring(target))
    return Ideal(target, keep)


def elimination_ideal(I: Ideal, keep_vars) -> Ideal:
    """I intersected with k[keep_vars], returned as an ideal of that subring."""
    ring = I.ring
    keep_vars = [v if isinstance(v, str) else ring.names[v] for v in keep_vars]
    elim = [n for n in ring.names if n not in keep_vars]
    big = Ring(tuple(elim) + tuple(keep_vars), ring.domain)
    target = Ring(tuple(keep_vars), ring.domain)
    return _eliminate_leading([g.to_ring(big) for g in I.gens], big, len(elim), target)


def _tagged(ring: Ring, stem: str):
    t = _fresh(ring, stem)
    return Ring((t,) + ring.names, ring.domain), t


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J from t*I + (1 - t)*J by eliminating t."""
    I._check(J)
    ring = I.ring
    big, t = _tagged(ring, "_t")
    tv = big.var(t)
    polys = [tv * g.to_ring(big) for g in I.gens] + [(1 - tv) * g.to_ring(big) for g in J.gens]
    return _eliminate_leading(polys, big, 1, ring)


def saturation(I: Ideal, f: Poly) -> Ideal:
    """(I : f^inf) from I + <1 - y*f> by eliminating y."""
    ring = I.ring
    f = ring(f)
    if f.is_constant() and f:
        return Ideal(ring, I.gens)
    big, y = _tagged(ring, "_y")
    yv = big.var(y)
    polys = [g.to_ring(big) for g in I.gens] + [1 - yv * f.to_ring(big)]
    return _eliminate_leading(polys, big, 1, ring)


def radical_membership(f: Poly, I: Ideal) -> bool:
    """f in sqrt(I) iff 1 in I + <1 - y*f>."""
    ring = I.ring
    f = ring(f)
    if not f:
        return True
    big, y = _tagged(ring, "_y")
    yv = big.var(y)
    J = Ideal(big, [g.to_ring(big) for g in I.gens] + [1 - yv * f.to_ring(big)])
    return J.is_unit()


def same_radical(I: Ideal, J: Ideal) -> bool:
    I._check(J)
    return all(radical_membership(g, J) for g in I.gens) and all(radical_membership(g, I) for g in J.gens)


def preimage(images, source: Ring, J: Ideal) -> Ideal:
    """phi^{-1}(J) for phi: source -> J.ring sending the i-th variable to ``images[i]``."""
    target = J.ring
    images = [target(g) for g in images]
    if len(images) != source.nvars:
        raise SignatureMismatch("need one image per source variable")
    # rename source variables away from target names
    renamed = []
    for n in source.names:
        renamed.append(_fresh(target, n) if target.has_var(n) else n)
    big = Ring(target.names + tuple(renamed), source.domain)
    src_in_big = Ring(tuple(renamed), source.domain)
    polys = [g.to_ring(big) for g in J.gens]
    for name, img in zip(renamed, images):
        polys.append(big.var(name) - img.to_ring(big))
    res = _eliminate_leading(polys, big, target.nvars, src_in_big)
    return Ideal(source, [Poly(source, dict(g.terms)) for g in res.gens])
