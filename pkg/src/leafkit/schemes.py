"""Affine schemes with a vector field, invariant open sets, and projective fields.

Everything is chart-local.  An affine scheme is ``k[x]/I`` with a derivation
preserving ``I``.  Open sets are complements ``X - V(J)`` and are compared up
to radical, since the topology only sees the underlying set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra.derivation import Derivation
from .algebra.poly import Poly, Ring
from .differential import diff_closure, is_differential_ideal
from .errors import NotDescending, RelationsNotContained, SignatureMismatch
from .groebner import Ideal, radical_membership, same_radical
from .linalg import nullspace


class AffineDiffScheme:
    __slots__ = ("ring", "relations", "derivation")

    def __init__(self, ring: Ring, relations: Ideal | None, derivation: Derivation):
        if derivation.ring != ring:
            raise SignatureMismatch("derivation lives over another ring")
        relations = Ideal(ring) if relations is None else relations
        if relations.ring != ring:
            raise SignatureMismatch("relations live over another ring")
        for g in relations.gens:
            dg = derivation(g)
            if not relations.contains(dg):
                raise NotDescending(f"derivation does not descend: d({g}) = {dg} is not in {relations}")
        self.ring = ring
        self.relations = relations
        self.derivation = derivation

    def __repr__(self):
        return f"AffineDiffScheme({self.ring!r}, {self.relations}, {self.derivation!r})"

    def ideal(self, *gens) -> Ideal:
        return Ideal(self.ring, [self.ring(g) for g in gens])

    def whole(self) -> OpenSet:
        return OpenSet(self, Ideal(self.ring, [self.ring.one]))

    def empty(self) -> OpenSet:
        return OpenSet(self, Ideal(self.ring))

    def basic_open(self, b) -> OpenSet:
        return OpenSet(self, Ideal(self.ring, [self.ring(b)]))


def make_affine(ring: Ring, relations: Ideal | None, derivation: Derivation) -> AffineDiffScheme:
    return AffineDiffScheme(ring, relations, derivation)


def is_leaf(X: AffineDiffScheme, p: Ideal) -> bool:
    """True iff p is differential; p must contain the relations and is assumed prime."""
    if p.ring != X.ring:
        raise SignatureMismatch("ideal lives over another ring")
    if not p.contains_ideal(X.relations):
        raise RelationsNotContained(f"{p} does not contain the relations {X.relations}")
    return is_differential_ideal(p + X.relations, X.derivation)


@dataclass(eq=False)
class OpenSet:
    """``X - V(complement)``; equality is equality of radicals modulo the relations."""

    scheme: AffineDiffScheme
    complement: Ideal

    @property
    def basic(self) -> bool:
        return len(self.complement.gens) == 1

    def full_ideal(self) -> Ideal:
        return self.complement + self.scheme.relations

    def __eq__(self, other):
        if not isinstance(other, OpenSet):
            return NotImplemented
        return same_radical(self.full_ideal(), other.full_ideal())

    __hash__ = None

    def __le__(self, other: OpenSet) -> bool:
        """U <= V iff V(J_V) is inside V(J_U), i.e. J_U inside sqrt(J_V)."""
        J = other.full_ideal()
        return all(radical_membership(g, J) for g in self.complement.gens)

    def union(self, other: OpenSet) -> OpenSet:
        # V(I) cap V(J) = V(I + J)
        return OpenSet(self.scheme, self.complement + other.complement)

    def intersection(self, other: OpenSet) -> OpenSet:
        # V(I) cup V(J) = V(I J)
        return OpenSet(self.scheme, self.complement * other.complement)

    def is_empty(self) -> bool:
        rel = self.scheme.relations
        return all(radical_membership(g, rel) for g in self.complement.gens)

    def is_whole(self) -> bool:
        return self.full_ideal().is_unit()

    def __str__(self):
        if self.basic:
            return f"D({self.complement.gens[0]})"
        return f"X - V({self.complement})"


@dataclass(eq=False)
class ClosedSet:
    scheme: AffineDiffScheme
    ideal: Ideal

    def __str__(self):
        return f"V({self.ideal.canonical()})"


def u_delta(X: AffineDiffScheme, U: OpenSet) -> OpenSet:
    """Least invariant open set containing U: the complement of V of the differential closure."""
    return OpenSet(X, diff_closure(U.full_ideal(), X.derivation).closure)


def greatest_invariant_closed(X: AffineDiffScheme, F: Ideal | ClosedSet) -> ClosedSet:
    I = F.ideal if isinstance(F, ClosedSet) else F
    return ClosedSet(X, diff_closure(I + X.relations, X.derivation).closure)


def is_invariant_open(X: AffineDiffScheme, U: OpenSet) -> bool:
    I = U.full_ideal()
    return same_radical(I, diff_closure(I, X.derivation).closure)


@dataclass(frozen=True)
class CFLawsReport:
    union_law: bool
    intersection_law: bool
    size: int

    @property
    def holds(self) -> bool:
        return self.union_law and self.intersection_law

    def __bool__(self):
        return self.holds


def cf_topology_laws(X: AffineDiffScheme, family) -> CFLawsReport:
    """Check (U_1 u ... u U_k)^d = U_1^d u ... and the same for intersections."""
    family = list(family)
    if not family:
        return CFLawsReport(True, True, 0)
    deltas = [u_delta(X, U) for U in family]
    union = family[0]
    inter = family[0]
    union_d = deltas[0]
    inter_d = deltas[0]
    for U, Ud in zip(family[1:], deltas[1:]):
        union = union.union(U)
        inter = inter.intersection(U)
        union_d = union_d.union(Ud)
        inter_d = inter_d.intersection(Ud)
    return CFLawsReport(u_delta(X, union) == union_d, u_delta(X, inter) == inter_d, len(family))


# -- projective space ----------------------------------------------------


def _chart_names(n, i):
    return [f"u{j}" for j in range(n + 1) if j != i]


class ProjectiveVectorField:
    """The field on P^n induced by ``A`` acting on homogeneous coordinates.

    In chart ``X_i != 0`` with ``u_j = X_j/X_i`` the field reads
    ``d(u_k) = L_k(u) - L_i(u) * u_k`` where ``L = A X`` and ``u_i = 1``.
    """

    def __init__(self, domain, n: int, matrix, validate: bool = True):
        if n < 1:
            raise ValueError("projective dimension must be at least 1")
        A = [[domain(c) for c in row] for row in matrix]
        if len(A) != n + 1 or any(len(row) != n + 1 for row in A):
            raise ValueError(f"matrix must be {n + 1}x{n + 1}")
        self.domain = domain
        self.n = n
        self.matrix = tuple(tuple(row) for row in A)
        self.charts = tuple(self._chart(i) for i in range(n + 1))
        if validate and n <= 3:
            bad = self.compatibility_failures()
            if bad:
                raise ValueError(f"charts {bad[0]} disagree on their overlap")

    def _chart(self, i) -> Derivation:
        ring = Ring(_chart_names(self.n, i), self.domain)
        X = self.homogeneous(ring, i)
        L = [sum((X[j].scale(c) for j, c in enumerate(row) if c), ring.zero) for row in self.matrix]
        images = [L[k] - L[i] * X[k] for k in range(self.n + 1) if k != i]
        return Derivation(ring, images)

    def homogeneous(self, ring: Ring, i: int):
        """Homogeneous coordinates as chart polynomials: X_i = 1, X_j = u_j."""
        return [ring.one if j == i else ring.var(f"u{j}") for j in range(self.n + 1)]

    def chart(self, i: int) -> Derivation:
        return self.charts[i]

    def _transport(self, g: Poly, i: int, j: int) -> Poly:
        """u_j^2 * g(v) where g lives in chart j and v_m = u_m / u_j (v_i = 1/u_j) in chart i."""
        ring_i = self.charts[i].ring
        uj = ring_i.index(f"u{j}")
        names_j = g.ring.names
        out = {}
        for e, c in g.terms.items():
            deg = sum(e)
            if deg > 2:
                raise ValueError("chart field of degree above 2")
            ne = [0] * ring_i.nvars
            for name, k in zip(names_j, e):
                m = int(name[1:])
                if m != i:
                    ne[ring_i.index(name)] += k
            ne[uj] += 2 - deg
            ne = tuple(ne)
            out[ne] = out.get(ne, self.domain.zero) + c
        return Poly(ring_i, {e: c for e, c in out.items() if c})

    def compatibility_failures(self):
        """Pairs (i, j) where chart j's field, moved to chart i, disagrees with chart i's.

        Compared after clearing denominators: u_j d(u_k) - u_k d(u_j) against
        u_j^2 * (d v_k)(u/u_j), for every coordinate v_k of chart j.
        """
        bad = []
        for i in range(self.n + 1):
            di = self.charts[i]
            ring_i = di.ring
            X = self.homogeneous(ring_i, i)
            for j in range(self.n + 1):
                if j == i:
                    continue
                dj = self.charts[j]
                for k in range(self.n + 1):
                    if k == j:
                        continue
                    lhs = X[j] * di(X[k]) - X[k] * di(X[j])
                    rhs = self._transport(dj.images[dj.ring.index(f"u{k}")], i, j)
                    if lhs != rhs:
                        bad.append((i, j))
                        break
        return bad


def projective_field_from_matrix(domain, n: int, matrix) -> ProjectiveVectorField:
    return ProjectiveVectorField(domain, n, matrix)


# -- characteristic polynomial and roots --------------------------------


def _det(M, ring):
    size = len(M)
    if size == 1:
        return M[0][0]
    out = ring.zero
    for c in range(size):
        if not M[0][c]:
            continue
        minor = [row[:c] + row[c + 1 :] for row in M[1:]]
        term = M[0][c] * _det(minor, ring)
        out = out - term if c % 2 else out + term
    return out


def characteristic_polynomial(domain, matrix, var: str = "t") -> Poly:
    """det(t*I - A) as a polynomial in one variable."""
    ring = Ring([var], domain)
    t = ring.gens[0]
    size = len(matrix)
    M = [[(t if r == c else ring.zero) - ring.const(matrix[r][c]) for c in range(size)] for r in range(size)]
    return _det(M, ring)


def _coeffs(f: Poly):
    """Dense coefficients, constant term first."""
    dom = f.ring.domain
    out = [dom.zero] * (f.degree() + 1)
    for (k,), c in f.terms.items():
        out[k] = c
    return out


def _eval(coeffs, x, dom):
    acc = dom.zero
    for c in reversed(coeffs):
        acc = dom.normalize(acc * x + c)
    return acc


def _deflate(coeffs, r, dom):
    """Quotient of the polynomial by (t - r), assuming r is a root."""
    n = len(coeffs) - 1
    q = [dom.zero] * n
    acc = dom.zero
    for k in range(n, 0, -1):
        acc = dom.normalize(acc * r + coeffs[k])
        q[k - 1] = acc
    return q


def _divisors(n: int):
    n = abs(n)
    small = []
    large = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def candidate_roots(coeffs, dom):
    """Every element of k that could be a root: rational-root candidates over QQ, all of GF(p)."""
    if dom.characteristic:
        return list(dom.elements())
    from math import lcm

    den = lcm(*(int(c.denominator) for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    while ints and ints[0] == 0:
        ints = ints[1:]
    cands = {dom.zero}
    if len(ints) > 1:
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                cands.add(dom(f"{p}/{q}"))
                cands.add(dom(f"-{p}/{q}"))
    return sorted(cands)


def roots_with_multiplicity(f: Poly):
    """(roots in k with multiplicity, leftover root-free cofactor as dense coefficients)."""
    dom = f.ring.domain
    coeffs = _coeffs(f)
    roots = []
    for r in candidate_roots(coeffs, dom):
        while len(coeffs) > 1 and not _eval(coeffs, r, dom):
            roots.append(r)
            coeffs = _deflate(coeffs, r, dom)
    return roots, coeffs


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple
    domain: object
    eigenvalue: object
    chart: int
    verified: bool

    def __str__(self):
        return "[" + ":".join(self.domain.fmt(c) for c in self.coords) + "]"

    def ideal_in_chart(self, V: ProjectiveVectorField) -> Ideal:
        ring = V.charts[self.chart].ring
        i = self.chart
        return Ideal(ring, [ring.var(f"u{j}") - ring.const(c) for j, c in enumerate(self.coords) if j != i])


@dataclass(frozen=True)
class ProjectiveLeavesReport:
    charpoly: Poly
    eigenvalues: tuple
    leaves: tuple
    residual_degree: int
    residual_irreducible: bool | None = None
    extension_degrees: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return all(p.verified for p in self.leaves) and (bool(self.leaves) or self.residual_degree > 0)

    def describe(self) -> str:
        parts = [str(p) for p in self.leaves]
        out = "{" + ", ".join(parts) + "}"
        if self.residual_degree:
            tag = "irreducible " if self.residual_irreducible else ""
            out += f"; {tag}root-free factor of degree {self.residual_degree}: leaf over an extension of degree "
            out += str(self.residual_degree) if self.residual_irreducible else f"<= {self.residual_degree}"
        return out


def _normalize_point(v, dom):
    i = next(k for k, c in enumerate(v) if c)
    inv = dom.inv(v[i])
    return tuple(dom.normalize(c * inv) for c in v), i


def projective_rational_leaves(V: ProjectiveVectorField) -> ProjectiveLeavesReport:
    """Closed points [v] for eigenvectors v of A over k, each checked as a leaf in its chart.

    A multi-dimensional eigenspace contributes one point per basis vector.
    """
    dom = V.domain
    size = V.n + 1
    chi = characteristic_polynomial(dom, V.matrix)
    roots, rest = roots_with_multiplicity(chi)
    distinct = []
    for r in roots:
        if r not in distinct:
            distinct.append(r)
    leaves = []
    for r in distinct:
        M = [[dom.normalize(V.matrix[a][b] - (r if a == b else dom.zero)) for b in range(size)] for a in range(size)]
        for v in nullspace(M, size, dom):
            coords, chart = _normalize_point(v, dom)
            pt = ProjectivePoint(coords, dom, r, chart, False)
            d = V.charts[chart]
            ok = is_differential_ideal(pt.ideal_in_chart(V), d)
            leaves.append(ProjectivePoint(coords, dom, r, chart, ok))
    deg = len(rest) - 1
    # no root in k and degree <= 3 means irreducible; beyond that only the degree is known
    irreducible = True if 0 < deg <= 3 else None
    ext = (deg,) if deg and irreducible else ()
    return ProjectiveLeavesReport(chi, tuple(distinct), tuple(leaves), deg, irreducible, ext)

