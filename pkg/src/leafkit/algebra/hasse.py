"""Hasse-Schmidt derivations truncated at a finite order M.

A family ``D_0, ..., D_M`` is stored through the images ``D_i(x_j)``.  It is
extended to all polynomials by the generalized Leibniz rule: writing
``S_j(T) = sum_i D_i(x_j) T^i``, the series of a monomial ``x^e`` is the
truncated product of the ``S_j(T)^{e_j}`` and ``D_i(x^e)`` is its coefficient
of ``T^i``.  Everything is verified up to M only.
"""

from __future__ import annotations

from math import comb

from ..errors import HasseSchmidtAxiomError, OrderExceeded, SignatureMismatch
from .derivation import Derivation
from .poly import Poly, Ring

DEFAULT_ORDER = 8


def _series_mul(a, b, upto):
    zero = a[0].ring.zero
    out = []
    for t in range(upto + 1):
        acc = zero
        for k in range(t + 1):
            if k < len(a) and t - k < len(b) and a[k] and b[t - k]:
                acc = acc + a[k] * b[t - k]
        out.append(acc)
    return out


class HasseSchmidtDerivation:
    __slots__ = ("ring", "order", "table", "_powers")

    def __init__(self, ring: Ring, order: int, images, validate: bool = True):
        """``images[j]`` lists ``D_1(x_j), ..., D_M(x_j)``; shorter lists are zero-padded."""
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(images) != ring.nvars:
            raise SignatureMismatch(f"{ring!r} needs {ring.nvars} image lists")
        table = []
        for x, imgs in zip(ring.gens, images):
            imgs = [ring(g) for g in imgs]
            if len(imgs) > order:
                raise OrderExceeded(f"{len(imgs)} images given for truncation order {order}")
            table.append((x, *imgs, *([ring.zero] * (order - len(imgs)))))
        self.ring = ring
        self.order = order
        self.table = tuple(table)
        self._powers = [[(ring.one,)] for _ in range(ring.nvars)]
        if validate:
            bad = self.iterativity_failures()
            if bad:
                i, j, k = bad[0]
                raise HasseSchmidtAxiomError(
                    f"iterativity fails: D_{i}(D_{j}({ring.names[k]})) != C({i + j},{i}) D_{i + j}({ring.names[k]})"
                )

    @classmethod
    def from_mapping(cls, ring: Ring, order: int, mapping: dict, validate: bool = True):
        images = [[] for _ in range(ring.nvars)]
        for name, imgs in mapping.items():
            images[ring.index(name)] = list(imgs)
        return cls(ring, order, images, validate)

    def __repr__(self):
        return f"HasseSchmidtDerivation({self.ring!r}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, HasseSchmidtDerivation) and (self.ring, self.order, self.table) == (
            other.ring,
            other.order,
            other.table,
        )

    def __hash__(self):
        return hash((self.ring, self.order, self.table))

    def image(self, i: int, j: int) -> Poly:
        """D_i of the j-th variable."""
        return self.table[j][i]

    def _power_series(self, j, k):
        pw = self._powers[j]
        while len(pw) <= k:
            pw.append(tuple(_series_mul(pw[-1], self.table[j], self.order)))
        return pw[k]

    def apply_all(self, f: Poly, upto: int | None = None):
        """[D_0(f), ..., D_upto(f)]."""
        upto = self.order if upto is None else upto
        if upto > self.order:
            raise OrderExceeded(f"D_{upto} requested but truncation order is {self.order}")
        f = self.ring(f)
        ring = self.ring
        out = [ring.zero] * (upto + 1)
        for e, c in f.terms.items():
            series = None
            for j, k in enumerate(e):
                if k:
                    s = self._power_series(j, k)
                    series = s[: upto + 1] if series is None else _series_mul(series, s, upto)
            if series is None:
                out[0] = out[0] + ring.const(c)
                continue
            for i in range(upto + 1):
                if series[i]:
                    out[i] = out[i] + series[i].scale(c)
        return out

    def __call__(self, i: int, f: Poly) -> Poly:
        if i < 0 or i > self.order:
            raise OrderExceeded(f"D_{i} requested but truncation order is {self.order}")
        return self.apply_all(f, i)[i]

    # -- axiom checks ---------------------------------------------------
    def iterativity_failures(self, polys=None):
        """Triples (i, j, k) with D_i(D_j(g_k)) != C(i+j, i) D_{i+j}(g_k), i, j >= 1, i + j <= M.

        ``g_k`` ranges over the variables unless ``polys`` is given.
        """
        polys = self.ring.gens if polys is None else polys
        bad = []
        for k, g in enumerate(polys):
            dg = self.apply_all(g)
            for j in range(1, self.order):
                inner = self.apply_all(dg[j], self.order - j)
                for i in range(1, self.order - j + 1):
                    if inner[i] != dg[i + j].scale(comb(i + j, i)):
                        bad.append((i, j, k))
        return bad

    def leibniz_failures(self, pairs):
        """Pairs (f, g) and indices i where D_i(fg) != sum_{k+l=i} D_k(f) D_l(g)."""
        bad = []
        for f, g in pairs:
            df, dg, dfg = self.apply_all(f), self.apply_all(g), self.apply_all(f * g)
            for i in range(self.order + 1):
                rhs = self.ring.zero
                for k in range(i + 1):
                    rhs = rhs + df[k] * dg[i - k]
                if rhs != dfg[i]:
                    bad.append((f, g, i))
        return bad


def hs_from_derivation(d: Derivation, order: int = DEFAULT_ORDER) -> HasseSchmidtDerivation:
    """The family D_i = d^i / i!, which needs i! invertible, so characteristic 0."""
    ring = d.ring
    if ring.characteristic != 0:
        raise ValueError(
            f"d^i/i! is undefined over {ring.domain!r}; build the Hasse-Schmidt family from explicit images"
        )
    images = []
    for x in ring.gens:
        orbit = d.orbit(x, order)
        images.append([orbit[i] / ring.domain.factorial(i) for i in range(1, order + 1)])
    return HasseSchmidtDerivation(ring, order, images, validate=False)


def hs_apply(h: HasseSchmidtDerivation, i: int, f: Poly) -> Poly:
    return h(i, f)
