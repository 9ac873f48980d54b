"""Differential ideals: membership tests, differential closure and trajectories.

The trajectory of a prime p is the greatest differential ideal inside p,
``p# = {f : f^(n) in p for all n}``.  It is computed by a degree-bounded
descent:

    J_0 = p,   J_{k+1} = ideal generated by {f in J_k : deg f <= D, d(f) in J_k}

Each step is an exact kernel computation on the degree-<=D slice of J_k.  A
fixed point is differential and contained in p, hence inside p#; it equals p#
whenever p# is generated in degree <= D.  That hypothesis is carried in the
result rather than checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra.derivation import Derivation
from .algebra.hasse import HasseSchmidtDerivation
from .algebra.poly import Poly, Ring
from .errors import Inconclusive, NotDifferentialMorphism, SignatureMismatch
from .groebner import Ideal, preimage
from .linalg import nullspace, row_space

EXACT = "Exact"
BOUNDED = "BoundedApprox"
DEFAULT_MAX_ROUNDS = 32


@dataclass(frozen=True)
class DiffIdealClosureResult:
    closure: Ideal
    rounds: int
    terminated: bool = True


@dataclass(frozen=True)
class TrajectoryResult:
    candidate: Ideal
    status: str
    degree_bound: int
    rounds: int
    truncation: int | None = None

    @property
    def exact(self) -> bool:
        return self.status == EXACT

    def certificate(self) -> str:
        parts = [self.status, f"deg<={self.degree_bound}", f"rounds={self.rounds}"]
        if self.truncation is not None:
            parts.append(f"M={self.truncation}")
        return "[" + ", ".join(parts) + "]"

    def __str__(self):
        return f"{self.candidate.canonical()} {self.certificate()}"


def _same_ring(I: Ideal, ring: Ring):
    if I.ring != ring:
        raise SignatureMismatch(f"ideal over {I.ring!r}, derivation over {ring!r}")


def is_differential_ideal(I: Ideal, d: Derivation) -> bool:
    _same_ring(I, d.ring)
    return all(I.contains(d(g)) for g in I.gens)


def is_hs_invariant(I: Ideal, h: HasseSchmidtDerivation) -> bool:
    """D_i(g) in I for every generator g and 1 <= i <= M."""
    _same_ring(I, h.ring)
    return all(I.contains(v) for g in I.gens for v in h.apply_all(g)[1:])


def diff_closure(I: Ideal, d: Derivation) -> DiffIdealClosureResult:
    """Smallest differential ideal containing I (ascending chain, stops when stable)."""
    _same_ring(I, d.ring)
    J = I
    rounds = 0
    while True:
        gens = J.groebner()
        new = [dg for dg in (d(g) for g in gens) if not J.contains(dg)]
        if not new:
            return DiffIdealClosureResult(Ideal(J.ring, gens), rounds)
        J = Ideal(J.ring, list(gens) + new)
        rounds += 1


def default_degree_bound(p: Ideal) -> int:
    return max(3, p.max_degree() + 2)


def _slice_basis(J: Ideal, degree: int, monos, index):
    """RREF basis (as polynomials) of the degree-<=D part of J, via monomial multiples of its GB."""
    ring = J.ring
    dom = ring.domain
    rows = []
    for g in J.groebner():
        dg = g.degree()
        if dg > degree:
            continue
        for m in ring.monomials_up_to(degree - dg):
            rows.append(g.mul_term(m, dom.one).coefficient_vector(index))
    basis = row_space(rows, len(monos), dom)
    return [Poly(ring, {monos[i]: c for i, c in enumerate(row) if c}) for row in basis]


def _descent(p: Ideal, conditions: Callable, invariant: Callable, degree_bound, max_rounds, truncation=None):
    ring = p.ring
    dom = ring.domain
    if p.is_unit():
        raise ValueError("trajectory needs a proper ideal")
    bound = degree_bound if degree_bound is not None else default_degree_bound(p)
    bound = max(bound, max((g.degree() for g in p.groebner()), default=0))
    if invariant(p):
        return TrajectoryResult(Ideal(ring, p.groebner()), EXACT, bound, 0, truncation)
    monos = ring.monomials_up_to(bound)
    index = {m: i for i, m in enumerate(monos)}
    J = p
    rounds = 0
    while True:
        S = _slice_basis(J, bound, monos, index)
        # column i of the constraint matrix: normal forms of the conditions on S[i]
        columns = []
        support = {}
        for s in S:
            col = {}
            for k, c in enumerate(conditions(s)):
                r = J.reduce(c)
                for e, v in r.terms.items():
                    col[(k, e)] = v
                    support.setdefault((k, e), len(support))
            columns.append(col)
        rows = [[dom.zero] * len(S) for _ in range(len(support))]
        for i, col in enumerate(columns):
            for key, v in col.items():
                rows[support[key]][i] = v
        ker = nullspace(rows, len(S), dom) if S else []
        if len(ker) == len(S):
            status = EXACT if invariant(J) else BOUNDED
            return TrajectoryResult(Ideal(ring, J.groebner()), status, bound, rounds, truncation)
        if rounds >= max_rounds:
            return TrajectoryResult(Ideal(ring, J.groebner()), BOUNDED, bound, rounds, truncation)
        kept = []
        for v in ker:
            f = ring.zero
            for lam, s in zip(v, S):
                if lam:
                    f = f + s.scale(lam)
            kept.append(f.coefficient_vector(index))
        basis = row_space(kept, len(monos), dom)
        J = Ideal(ring, [Poly(ring, {monos[i]: c for i, c in enumerate(row) if c}) for row in basis])
        rounds += 1


def trajectory(p: Ideal, d: Derivation, degree_bound: int | None = None, max_rounds: int = DEFAULT_MAX_ROUNDS):
    """Candidate for p# under a derivation; ``p`` is assumed prime by the caller."""
    _same_ring(p, d.ring)
    return _descent(p, lambda f: (d(f),), lambda J: is_differential_ideal(J, d), degree_bound, max_rounds)


def hs_trajectory(
    p: Ideal, h: HasseSchmidtDerivation, degree_bound: int | None = None, max_rounds: int = DEFAULT_MAX_ROUNDS
):
    """Same descent with the conditions D_i(f) in J for 1 <= i <= M; exact relative to M."""
    _same_ring(p, h.ring)
    return _descent(
        p,
        lambda f: h.apply_all(f)[1:],
        lambda J: is_hs_invariant(J, h),
        degree_bound,
        max_rounds,
        truncation=h.order,
    )


@dataclass(frozen=True)
class FunctorialityReport:
    holds: bool
    pullback_of_trajectory: Ideal
    trajectory_of_pullback: Ideal
    target_result: TrajectoryResult
    source_result: TrajectoryResult

    def __bool__(self):
        return self.holds


def check_differential_morphism(images, dA: Derivation, dB: Derivation):
    """Raise unless phi(dA(u)) = dB(phi(u)) for every variable u of the source."""
    B = dB.ring
    images = [B(g) for g in images]
    for u, du, img in zip(dA.ring.names, dA.images, images):
        lhs = du.compose(images, B)
        rhs = dB(img)
        if lhs != rhs:
            raise NotDifferentialMorphism(f"phi(d{u}) = {lhs} but d(phi({u})) = {rhs}")
    return images


def functoriality_check(
    images, p: Ideal, dA: Derivation, dB: Derivation, degree_bound=None, max_rounds=DEFAULT_MAX_ROUNDS
) -> FunctorialityReport:
    """Compare phi^{-1}(p#) with (phi^{-1} p)# for phi: A -> B given by variable images.

    Raises ``Inconclusive`` when either trajectory is only a bounded approximation.
    """
    _same_ring(p, dB.ring)
    images = check_differential_morphism(images, dA, dB)
    tb = trajectory(p, dB, degree_bound, max_rounds)
    if not tb.exact:
        raise Inconclusive(f"trajectory in the target is {tb.status}")
    lhs = preimage(images, dA.ring, tb.candidate)
    q = preimage(images, dA.ring, p)
    ta = trajectory(q, dA, degree_bound, max_rounds)
    if not ta.exact:
        raise Inconclusive(f"trajectory in the source is {ta.status}")
    rhs = ta.candidate
    return FunctorialityReport(lhs == rhs, lhs, rhs, tb, ta)
