"""Sparse multivariate polynomials over QQ or GF(p).

A ``Poly`` is a map from dense exponent tuples to nonzero coefficients.
Values are treated as immutable; every operation returns a new polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral

from gmpy2 import mpq

from ..errors import SignatureMismatch
from .domains import QQ
from .orders import DEGREVLEX

_SCALARS = (Integral, Fraction, type(mpq(0)))


class Ring:
    """Polynomial ring signature: ordered variable names plus a coefficient field."""

    __slots__ = ("names", "domain", "nvars", "_index", "_gens")

    def __init__(self, names, domain=QQ):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self.domain = domain
        self.nvars = len(names)
        self._index = {n: i for i, n in enumerate(names)}
        self._gens = None

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names and self.domain == other.domain

    def __hash__(self):
        return hash((self.names, self.domain))

    def __repr__(self):
        return f"{self.domain!r}[{','.join(self.names)}]"

    @property
    def characteristic(self) -> int:
        return self.domain.characteristic

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self!r}") from None

    def has_var(self, name: str) -> bool:
        return name in self._index

    @property
    def gens(self):
        if self._gens is None:
            z = [0] * self.nvars
            gens = []
            for i in range(self.nvars):
                e = list(z)
                e[i] = 1
                gens.append(Poly(self, {tuple(e): self.domain.one}))
            self._gens = tuple(gens)
        return self._gens

    def var(self, name: str) -> Poly:
        return self.gens[self.index(name)]

    @property
    def zero(self) -> Poly:
        return Poly(self, {})

    @property
    def one(self) -> Poly:
        return self.const(1)

    def const(self, c) -> Poly:
        c = self.domain(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exp, coeff=1) -> Poly:
        c = self.domain(coeff)
        return Poly(self, {tuple(exp): c} if c else {})

    def __call__(self, value) -> Poly:
        if isinstance(value, Poly):
            if value.ring != self:
                raise SignatureMismatch(f"{value.ring!r} is not {self!r}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.const(value)

    def parse(self, text: str) -> Poly:
        from .syntax import parse_poly

        return parse_poly(text, self)

    def with_domain(self, domain) -> Ring:
        return Ring(self.names, domain)

    def monomials_up_to(self, degree: int):
        """All exponent tuples of total degree <= ``degree``, largest first in degrevlex."""
        out = []

        def rec(i, left, acc):
            if i == self.nvars:
                out.append(tuple(acc))
                return
            for k in range(left + 1):
                acc.append(k)
                rec(i + 1, left - k, acc)
                acc.pop()

        rec(0, degree, [])
        out.sort(key=DEGREVLEX.key, reverse=True)
        return out


class Poly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- coercion -------------------------------------------------------
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise SignatureMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, _SCALARS):
            return self.ring.const(other)
        return NotImplemented

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        """Coefficient of the monomial 1."""
        return self.terms.get((0,) * self.ring.nvars, self.ring.domain.zero)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, _SCALARS):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic -----------------------------------------------------
    def __neg__(self):
        dom = self.ring.domain
        return Poly(self.ring, {e: dom.normalize(-c) for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if p:
                    v %= p
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Poly(self.ring, {})
        p = self.ring.characteristic
        out = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                out[e] = get(e, 0) + c1 * c2
        if p:
            out = {e: c % p for e, c in out.items() if c % p}
        else:
            out = {e: c for e, c in out.items() if c}
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        dom = self.ring.domain
        c = dom(c)
        if not c:
            return Poly(self.ring, {})
        return Poly(self.ring, {e: dom.normalize(v * c) for e, v in self.terms.items()})

    def mul_term(self, exp, coeff) -> Poly:
        """Multiply by ``coeff * x^exp`` (``coeff`` already a domain element)."""
        if not coeff:
            return Poly(self.ring, {})
        dom = self.ring.domain
        return Poly(
            self.ring,
            {tuple([a + b for a, b in zip(e, exp)]): dom.normalize(c * coeff) for e, c in self.terms.items()},
        )

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("only division by nonzero constants is supported")
            other = other.constant_value()
        dom = self.ring.domain
        return self.scale(dom.inv(dom(other)))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure ------------------------------------------------------
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def variables_used(self):
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return sorted(used)

    def leading_term(self, order=DEGREVLEX):
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order=DEGREVLEX):
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order=DEGREVLEX):
        return self.terms[max(self.terms, key=order.key)]

    def monic(self, order=DEGREVLEX) -> Poly:
        if not self.terms:
            return self
        return self.scale(self.ring.domain.inv(self.leading_coefficient(order)))

    def sorted_terms(self, order=DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def diff(self, var) -> Poly:
        """Partial derivative with respect to a variable (name or index)."""
        i = self.ring.index(var) if isinstance(var, str) else var
        dom = self.ring.domain
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                v = dom.normalize(c * k)
                if v:
                    ne = list(e)
                    ne[i] = k - 1
                    out[tuple(ne)] = v
        return Poly(self.ring, out)

    def compose(self, images, target: Ring | None = None) -> Poly:
        """Substitute ``images[i]`` for the i-th variable; images live in ``target``."""
        if len(images) != self.ring.nvars:
            raise SignatureMismatch("need one image per variable")
        target = target or (images[0].ring if images else self.ring)
        images = [target(g) for g in images]
        powers = [[target.one] for _ in images]
        result = target.zero
        for e, c in self.terms.items():
            t = target.const(c)
            for i, k in enumerate(e):
                if k:
                    pw = powers[i]
                    while len(pw) <= k:
                        pw.append(pw[-1] * images[i])
                    t = t * pw[k]
            result = result + t
        return result

    def evaluate(self, values):
        """Evaluate at a point given as a sequence of domain elements."""
        dom = self.ring.domain
        vals = [dom(v) for v in values]
        total = dom.zero
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v**k
            total = total + t
        return dom.normalize(total)

    def to_ring(self, target: Ring) -> Poly:
        """Re-embed into a ring that contains all variables actually used, matched by name."""
        if target == self.ring:
            return self
        idx = []
        for i in self.variables_used():
            idx.append((i, target.index(self.ring.names[i])))
        out = {}
        z = [0] * target.nvars
        for e, c in self.terms.items():
            ne = list(z)
            for i, j in idx:
                ne[j] = e[i]
            out[tuple(ne)] = target.domain(c)
        return Poly(target, {e: c for e, c in out.items() if c})

    def coefficient_vector(self, index: dict):
        """Coefficients laid out along ``index`` (exponent -> column)."""
        vec = [self.ring.domain.zero] * len(index)
        for e, c in self.terms.items():
            vec[index[e]] = c
        return vec

    # -- printing -------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        dom = self.ring.domain
        names = self.ring.names
        parts = []
        for e, c in self.sorted_terms(DEGREVLEX):
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            cs = dom.fmt(c)
            if not mono:
                s = cs
            elif cs == "1":
                s = mono
            elif cs == "-1":
                s = "-" + mono
            else:
                s = f"{cs}*{mono}"
            if parts and not s.startswith("-"):
                s = "+" + s
            parts.append(s)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self}, {self.ring!r})"
