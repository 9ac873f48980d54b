"""Constant fractions, their extension to invariant open sets, and the identities behind it.

Two halves.  The first works in a jet ring (free differential polynomials cut
off at an order M) and proves membership of a target in the ideal spanned by a
relation Theta and its derivatives by replaying the inductive argument: every
step is an explicit combination ``sum_j c_j * Theta^(j)``, so each verdict ships
its cofactors and is checked by plain expansion.

The second half works on an affine scheme: constancy of a/b on D(b), the family
(a^(n), b^(n)) extending it, and compatibility of fraction patches, where
"vanishes on D(b)" always means membership in sqrt(relations : b^inf).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
import gmpy2

from .algebra.poly import Poly, Ring
from .differential import diff_closure
from .errors import CertificateFailure, EmptyOpenSet, IncompatibleSections, LeafkitError, OrderExceeded
from .groebner import Ideal, lift, radical_membership, same_radical, saturation
from .schemes import AffineDiffScheme, OpenSet

DEFAULT_PROP_MAX_N = 6
DEFAULT_EXTENSION_ORDER = 4


class NotConstant(LeafkitError, ValueError):
    """A fraction handed to the extension map has nonzero derivative on its domain."""


# -- jet rings -----------------------------------------------------------


class JetRing:
    """Polynomials in ``s_0, ..., s_M`` for each base symbol ``s``, with the shift s_i -> s_{i+1}."""

    def __init__(self, symbols, order: int, domain=None):
        if order < 0:
            raise ValueError("jet order must be nonnegative")
        self.symbols = tuple(symbols)
        self.order = order
        names = [f"{s}_{i}" for s in self.symbols for i in range(order + 1)]
        self.ring = Ring(names) if domain is None else Ring(names, domain)
        # exponent slots holding an order-M variable
        self._top = [self.ring.index(f"{s}_{order}") for s in self.symbols]

    def __repr__(self):
        return f"JetRing({', '.join(self.symbols)}; order {self.order})"

    def var(self, symbol: str, i: int = 0) -> Poly:
        if i > self.order:
            raise OrderExceeded(f"{symbol}^({i}) is beyond jet order {self.order}")
        return self.ring.var(f"{symbol}_{i}")

    def __call__(self, f) -> Poly:
        return self.ring(f)

    def shift(self, f: Poly) -> Poly:
        """The derivative; fails if f involves a variable of the top order."""
        f = self.ring(f)
        out = self.ring.zero
        for k in self._top:
            if f.degree_in(k) > 0:
                raise OrderExceeded(f"cannot differentiate {self.ring.names[k]} within jet order {self.order}")
        for i, name in enumerate(self.ring.names):
            if f.degree_in(i) > 0:
                s, lvl = name.rsplit("_", 1)
                out = out + f.diff(i) * self.var(s, int(lvl) + 1)
        return out

    def shifts(self, f: Poly, n: int):
        """[f, f', ..., f^(n)]."""
        out = [self.ring(f)]
        for _ in range(n):
            out.append(self.shift(out[-1]))
        return out


class Combination:
    """``sum_j cof[j] * Theta^(j)`` in a jet ring, for a fixed relation Theta."""

    __slots__ = ("jet", "cof")

    def __init__(self, jet: JetRing, cof: dict):
        self.jet = jet
        self.cof = {j: c for j, c in cof.items() if c}

    @classmethod
    def generator(cls, jet, j=0):
        return cls(jet, {j: jet.ring.one})

    @classmethod
    def zero(cls, jet):
        return cls(jet, {})

    def __add__(self, other):
        out = dict(self.cof)
        for j, c in other.cof.items():
            out[j] = out.get(j, self.jet.ring.zero) + c
        return Combination(self.jet, out)

    def __neg__(self):
        return Combination(self.jet, {j: -c for j, c in self.cof.items()})

    def __sub__(self, other):
        return self + (-other)

    def times(self, p: Poly) -> Combination:
        p = self.jet.ring(p)
        return Combination(self.jet, {j: c * p for j, c in self.cof.items()})

    def shift(self) -> Combination:
        """Derivative: (c Theta^(j))' = c' Theta^(j) + c Theta^(j+1)."""
        out = {}
        zero = self.jet.ring.zero
        for j, c in self.cof.items():
            out[j] = out.get(j, zero) + self.jet.shift(c)
            out[j + 1] = out.get(j + 1, zero) + c
        return Combination(self.jet, out)

    def expand(self, theta_shifts) -> Poly:
        out = self.jet.ring.zero
        for j, c in self.cof.items():
            if j >= len(theta_shifts):
                raise OrderExceeded(f"Theta^({j}) is beyond the jet order")
            out = out + c * theta_shifts[j]
        return out


@dataclass(frozen=True)
class IdentityCertificate:
    """``target = sum_j cofactors[j] * Theta^(j)``, replayable by expansion."""

    name: str
    params: tuple
    relation: Poly
    target: Poly
    cofactors: tuple  # (j, poly) pairs
    theta_shifts: tuple

    def replay(self) -> bool:
        out = self.target.ring.zero
        for j, c in self.cofactors:
            out = out + c * self.theta_shifts[j]
        return out == self.target

    def max_shift(self) -> int:
        return max((j for j, _ in self.cofactors), default=-1)

    def to_text(self) -> str:
        head = f"{self.name} {' '.join(f'{k}={v}' for k, v in self.params)}".rstrip()
        lines = [f"{head}: target = {self.target}", f"  Theta = {self.relation}"]
        if not self.cofactors:
            lines.append("  target is identically 0")
        for j, c in self.cofactors:
            lines.append(f"  c_{j} = {c}")
        return "\n".join(lines)


def _certificate(name, params, jet, relation, target, comb_, theta_shifts):
    cert = IdentityCertificate(
        name,
        tuple(params),
        relation,
        target,
        tuple(sorted(comb_.cof.items())),
        tuple(theta_shifts),
    )
    if not cert.replay():
        raise CertificateFailure(f"{name} {params}: cofactor expansion does not reproduce the target")
    return cert


def groebner_member(target: Poly, gens) -> bool:
    """Independent membership test by a Groebner basis of the listed generators."""
    return Ideal(target.ring, list(gens)).contains(target)


# -- the two-fraction identity ------------------------------------------


@dataclass(frozen=True)
class TwoFractionCertificate:
    lhs: Poly
    rhs: Poly
    certificate: IdentityCertificate

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and self.certificate.replay()


def two_fraction_jets(order: int = 2) -> JetRing:
    return JetRing(["t", "A1", "A2", "B1", "B2"], order)


def verify_lemma_4_3(order: int = 2) -> TwoFractionCertificate:
    """With Theta = t(A1 B2 - B1 A2):

        t B1 B2 Theta' - (t B1 B2' + t B1' B2 + t' B1 B2) Theta
          = t^2 (B2^2 (A1' B1 - A1 B1') - B1^2 (A2' B2 - A2 B2'))

    checked by expansion; the certificate records the cofactors of Theta, Theta'.
    """
    if order < 2:
        raise ValueError("jet order must be at least 2")
    J = two_fraction_jets(order)
    t, A1, A2, B1, B2 = (J.var(s) for s in J.symbols)
    t1, A11, A21, B11, B21 = (J.var(s, 1) for s in J.symbols)
    theta = t * (A1 * B2 - B1 * A2)
    c1 = t * B1 * B2
    c0 = -(t * B1 * B21 + t * B11 * B2 + t1 * B1 * B2)
    lhs = c1 * J.shift(theta) + c0 * theta
    rhs = t * t * (B2 * B2 * (A11 * B1 - A1 * B11) - B1 * B1 * (A21 * B2 - A2 * B21))
    combo = Combination(J, {0: c0, 1: c1})
    cert = _certificate("two-fraction", [("M", order)], J, theta, rhs, combo, J.shifts(theta, 1))
    out = TwoFractionCertificate(lhs, rhs, cert)
    if not out.holds:
        raise CertificateFailure("two-fraction identity does not expand correctly")
    return out


# -- E_{N,i} identities ---------------------------------------------------


class ConstantJets:
    """Jet ring on a, b, theta with Theta = theta (a' b - a b') and the quantities E_{N,i}."""

    def __init__(self, order: int):
        self.jet = JetRing(["a", "b", "theta"], order)
        J = self.jet
        self.relation = J.var("theta") * (J.var("a", 1) * J.var("b") - J.var("a") * J.var("b", 1))
        self.theta_shifts = J.shifts(self.relation, order - 1)

    def a(self, i=0):
        return self.jet.var("a", i)

    def b(self, i=0):
        return self.jet.var("b", i)

    def theta(self, i=0):
        return self.jet.var("theta", i)

    def E(self, N: int, i: int) -> Poly:
        """b^(N-1) theta^N (b^(i) a^(N-i) - a^(i) b^(N-i))."""
        w = self.b(i) * self.a(N - i) - self.a(i) * self.b(N - i)
        return self.b() ** (N - 1) * self.theta() ** N * w

    def recurrence_defect(self, N: int, i: int) -> Poly:
        """b theta (E_{N,i})' - E_{N+1,i+1} - E_{N+1,i} - ((N-1) theta b' + N b theta') E_{N,i}; zero exactly."""
        b, th = self.b(), self.theta()
        corr = th * self.b(1) * (N - 1) + b * self.theta(1) * N
        E = self.E(N, i)
        return b * th * self.jet.shift(E) - self.E(N + 1, i + 1) - self.E(N + 1, i) - corr * E

    def naive_recurrence_defect(self, N: int, i: int) -> Poly:
        """Same without the correction term; nonzero in general."""
        E = self.E(N, i)
        return self.b() * self.theta() * self.jet.shift(E) - self.E(N + 1, i + 1) - self.E(N + 1, i)

    def combinations(self, N_max: int):
        """Combinations for E_{N,i}, 1 <= N <= N_max, built level by level.

        Level N+1 comes from level N through
            E_{N+1,i+1} + E_{N+1,i} = b theta (E_{N,i})' - ((N-1) theta b' + N b theta') E_{N,i}
        started at an anchor index: E_{2k,k} = 0, or for N+1 = 2k+1 the two-fraction
        identity applied to E_{k,0} with t = b^(k-1) theta^k, A1 = a^(k), B1 = b^(k), A2 = a, B2 = b.
        """
        J = self.jet
        b, th = self.b(), self.theta()
        levels = {1: [Combination.generator(J), -Combination.generator(J)]}
        for N in range(1, N_max):
            prev = levels[N]
            corr = th * self.b(1) * (N - 1) + b * self.theta(1) * N
            rhs = [prev[i].shift().times(b * th) - prev[i].times(corr) for i in range(N + 1)]
            M1 = N + 1
            cur = [None] * (M1 + 1)
            if M1 % 2 == 0:
                i0 = M1 // 2
                cur[i0] = Combination.zero(J)
            else:
                k = M1 // 2
                i0 = k
                t = b ** (k - 1) * th**k
                B1, B2 = self.b(k), b
                tp = J.shift(t)
                C = levels[k][0]
                lemma = C.shift().times(t * B1 * B2) - C.times(t * B1 * self.b(1) + t * self.b(k + 1) * B2 + tp * B1 * B2)
                extra = b ** (2 * k - 2) * th ** (2 * k) * B1 * B1
                cur[i0] = lemma.times(th) + Combination.generator(J).times(extra)
            for i in range(i0, M1):
                cur[i + 1] = rhs[i] - cur[i]
            for i in range(i0 - 1, -1, -1):
                cur[i] = rhs[i] - cur[i + 1]
            levels[M1] = cur
        return levels


@dataclass(frozen=True)
class PropCertificate:
    N: int
    order: int
    certificates: tuple  # one IdentityCertificate per i
    recurrence_exact: bool
    groebner_checked: tuple = ()  # indices i confirmed by an independent Groebner membership run

    @property
    def holds(self) -> bool:
        return self.recurrence_exact and all(c.replay() for c in self.certificates)

    def failures(self):
        return [(self.N, i) for i, c in enumerate(self.certificates) if not c.replay()]


def verify_prop_4_2(N: int, order: int | None = None, groebner_check: bool = False) -> PropCertificate:
    """E_{N,i} in (Theta, Theta', ...) for 0 <= i <= N, with replayable cofactors.

    ``order`` defaults to N + 2.  With ``groebner_check`` the membership is also
    confirmed by a Groebner basis of (Theta, ..., Theta^(N-1)), which is slow
    beyond N = 3.
    """
    if N < 1:
        raise ValueError("N must be positive")
    order = N + 2 if order is None else order
    if order < N + 1:
        raise OrderExceeded(f"jet order {order} is too small for N = {N}; need at least {N + 1}")
    CJ = ConstantJets(order)
    levels = CJ.combinations(N)
    certs = []
    for i in range(N + 1):
        certs.append(
            _certificate(
                "fraction-derivatives",
                [("N", N), ("i", i)],
                CJ.jet,
                CJ.relation,
                CJ.E(N, i),
                levels[N][i],
                CJ.theta_shifts,
            )
        )
    rec = all(not CJ.recurrence_defect(n, i) for n in range(1, N) for i in range(n + 1))
    checked = ()
    if groebner_check:
        gens = CJ.theta_shifts[: max(N, 1)]
        checked = tuple(i for i in range(N + 1) if groebner_member(CJ.E(N, i), gens))
    return PropCertificate(N, order, tuple(certs), rec, checked)


def verify_theta_lemma(n: int, groebner_check: bool = False):
    """theta^(m) f^(m+1) in (theta f, (theta f)', ...) for 0 <= m <= n.

    Built by C_0 = theta f and C_{m+1} = f C_m' - (m+1) f' C_m.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    J = JetRing(["theta", "f"], n + 1)
    th, f = J.var("theta"), J.var("f")
    rel = th * f
    shifts = J.shifts(rel, n)
    C = Combination.generator(J)
    out = []
    for m in range(n + 1):
        target = J.var("theta", m) * f ** (m + 1)
        cert = _certificate("theta-power", [("n", m)], J, rel, target, C, shifts)
        if groebner_check and not groebner_member(target, shifts[: m + 1]):
            raise CertificateFailure(f"Groebner membership disagrees at n = {m}")
        out.append(cert)
        if m < n:
            C = C.shift().times(f) - C.times(J.var("f", 1) * (m + 1))
    return out


# -- fractions on an affine scheme ---------------------------------------


def _nonempty(X: AffineDiffScheme, b: Poly):
    if radical_membership(b, X.relations):
        raise EmptyOpenSet(f"D({b}) is empty: {b} is nilpotent modulo the relations")


def vanishes_on(X: AffineDiffScheme, f: Poly, b: Poly) -> bool:
    """f = 0 on D(b) of the reduced scheme: f in sqrt(relations : b^inf)."""
    f = X.ring(f)
    if not f:
        return True
    return radical_membership(f, saturation(X.relations, X.ring(b)))


def is_constant_fraction(X: AffineDiffScheme, a, b) -> bool:
    """(a/b)' = 0 in the localization at b: a'b - ab' in (relations : b^inf)."""
    a, b = X.ring(a), X.ring(b)
    _nonempty(X, b)
    d = X.derivation
    w = d(a) * b - a * d(b)
    if not w:
        return True
    return saturation(X.relations, b).contains(w)


def format_fraction(a: Poly, b: Poly) -> str:
    if b.is_constant() and b.constant_value() == b.ring.domain.one:
        return str(a)
    def wrap(p):
        s = str(p)
        return s if re.fullmatch(r"-?[A-Za-z0-9_^]+", s) else f"({s})"

    return f"{wrap(a)}/{wrap(b)}"


class FractionSection:
    """A function on the union of the D(b_i) given by a_i/b_i on each D(b_i)."""

    def __init__(self, scheme: AffineDiffScheme, patches):
        ring = scheme.ring
        self.scheme = scheme
        self.patches = tuple((ring(a), ring(b)) for a, b in patches)
        if not self.patches:
            raise ValueError("a section needs at least one patch")

    def __len__(self):
        return len(self.patches)

    def __str__(self):
        return "{" + ", ".join(format_fraction(a, b) for a, b in self.patches) + "}"

    def domain(self) -> OpenSet:
        return OpenSet(self.scheme, Ideal(self.scheme.ring, [b for _, b in self.patches]))

    def compatible(self, i: int, j: int) -> bool:
        ai, bi = self.patches[i]
        aj, bj = self.patches[j]
        return vanishes_on(self.scheme, ai * bj - aj * bi, bi * bj)

    def incompatible_pairs(self):
        n = len(self.patches)
        return [(i, j) for i in range(n) for j in range(i + 1, n) if not self.compatible(i, j)]

    def agrees_with(self, other: FractionSection) -> bool:
        """Equal on the common domain: every patch of one matches every patch of the other."""
        return all(
            vanishes_on(self.scheme, a * d - c * b, b * d) for a, b in self.patches for c, d in other.patches
        )

    def restrict(self, b) -> FractionSection:
        """Restriction to D(b) inside the domain, keeping patches as (a_i b, b_i b)."""
        b = self.scheme.ring(b)
        if not self.scheme.basic_open(b) <= self.domain():
            raise ValueError(f"D({b}) is not inside the domain of the section")
        kept = [(a * b, c * b) for a, c in self.patches if not radical_membership(c * b, self.scheme.relations)]
        return FractionSection(self.scheme, kept)

    def global_value(self) -> Poly | None:
        """The polynomial this section equals, when its domain is all of X."""
        X = self.scheme
        for a, b in self.patches:
            if b.is_constant() and b:
                return a.scale(X.ring.domain.inv(b.constant_value()))
        dens = [b for _, b in self.patches]
        cof = lift(X.ring.one, Ideal(X.ring, dens + list(X.relations.gens)))
        if cof is None:
            return None
        g = X.relations.reduce(sum((h * a for h, (a, _) in zip(cof, self.patches)), X.ring.zero))
        if all(vanishes_on(X, g * b - a, b) for a, b in self.patches):
            return g
        return None


@dataclass(frozen=True)
class SectionCertificate:
    pairs: tuple
    constant_patches: tuple = ()

    def to_text(self) -> str:
        body = ", ".join(f"({i},{j})" for i, j in self.pairs) or "vacuous"
        return f"compatible pairs: {body}"


def validate_kovacic_section(s: FractionSection, check_constant: bool = False) -> SectionCertificate:
    """Pairwise agreement on overlaps; raises IncompatibleSections naming the first bad pair."""
    pairs = []
    n = len(s.patches)
    for i in range(n):
        for j in range(i + 1, n):
            if not s.compatible(i, j):
                ai, bi = s.patches[i]
                aj, bj = s.patches[j]
                raise IncompatibleSections(i, j, f"{ai*bj - aj*bi} does not vanish on D({bi*bj})")
            pairs.append((i, j))
    const = ()
    if check_constant:
        const = tuple(k for k, (a, b) in enumerate(s.patches) if is_constant_fraction(s.scheme, a, b))
        if len(const) != n:
            bad = next(k for k in range(n) if k not in const)
            raise NotConstant(f"patch {bad} is not constant")
    return SectionCertificate(tuple(pairs), const)


@dataclass(frozen=True)
class Extension:
    section: FractionSection
    orders: tuple  # n for each kept patch (a^(n), b^(n))
    covers_delta: bool
    certificate: SectionCertificate
    max_order: int

    def __str__(self):
        tag = "covers D(b)^delta" if self.covers_delta else "partial cover of D(b)^delta"
        return f"{self.section} [{tag}, orders<={self.max_order}]"


def extend_constant(X: AffineDiffScheme, a, b, max_order: int = DEFAULT_EXTENSION_ORDER) -> Extension:
    """The family (a^(n), b^(n)), n <= N, b^(n) not nilpotent; X is assumed reduced."""
    a, b = X.ring(a), X.ring(b)
    if not is_constant_fraction(X, a, b):
        raise NotConstant(f"({a})/({b}) has nonzero derivative on D({b})")
    d = X.derivation
    A = d.orbit(a, max_order)
    B = d.orbit(b, max_order)
    keep = []
    seen = set()
    for n in range(max_order + 1):
        # exact repeats (eigenfunctions) add nothing to the cover
        if (A[n], B[n]) in seen or radical_membership(B[n], X.relations):
            continue
        seen.add((A[n], B[n]))
        keep.append(n)
    section = FractionSection(X, [(A[n], B[n]) for n in keep])
    cert = validate_kovacic_section(section)
    closure = diff_closure(Ideal(X.ring, [b]) + X.relations, d).closure
    covers = same_radical(section.domain().full_ideal(), closure)
    return Extension(section, tuple(keep), covers, cert, max_order)


def restriction_matches(X: AffineDiffScheme, ext: Extension, a, b) -> bool:
    """Every patch of the extension restricts on D(b) to the class of a/b."""
    a, b = X.ring(a), X.ring(b)
    return all(vanishes_on(X, an * b - a * bn, b * bn) for an, bn in ext.section.patches)


@dataclass(frozen=True)
class ComparisonEntry:
    numerator: Poly
    denominator: Poly
    constant: bool
    extension: Extension | None
    restriction_ok: bool
    reextension_ok: bool
    global_value: Poly | None

    @property
    def ok(self) -> bool:
        return self.constant and self.restriction_ok and self.reextension_ok

    def __str__(self):
        frac = format_fraction(self.numerator, self.denominator)
        if not self.constant:
            return f"{frac}: not constant"
        status = "ok" if self.ok else "FAILED"
        out = f"{frac}: extends to {self.extension.section}, round trips {status}"
        if self.global_value is not None:
            out += f", global {self.global_value}"
        return out


@dataclass(frozen=True)
class ComparisonReport:
    base: Poly
    entries: tuple

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)


def constants_comparison_report(X: AffineDiffScheme, b, fractions, max_order: int = DEFAULT_EXTENSION_ORDER):
    """Round trips between constants on U = D(b) and constants on U^delta.

    Each fraction a/c must be constant with D(b) inside D(c).  Extension
    followed by restriction to U must give back a/c; and restricting the
    extension to any of its patches then extending again must reproduce the
    same section on the common domain.
    """
    ring = X.ring
    b = ring(b)
    _nonempty(X, b)
    entries = []
    for a, c in fractions:
        a, c = ring(a), ring(c)
        if not radical_membership(b, Ideal(ring, [c]) + X.relations):
            raise ValueError(f"D({b}) is not inside D({c})")
        if not is_constant_fraction(X, a, c):
            entries.append(ComparisonEntry(a, c, False, None, False, False, None))
            continue
        ext = extend_constant(X, a, c, max_order)
        res_ok = restriction_matches(X, ext, a, c) and restriction_matches(X, ext, a * b, c * b)
        re_ok = True
        for an, bn in ext.section.patches:
            again = extend_constant(X, an, bn, max_order)
            if not (again.section.agrees_with(ext.section) and again.section.domain() <= ext.section.domain()):
                re_ok = False
        g = ext.section.global_value() if ext.section.domain().is_whole() else None
        entries.append(ComparisonEntry(a, c, True, ext, res_ok, re_ok, g))
    return ComparisonReport(b, tuple(entries))


# -- reducedness hint ------------------------------------------------------


def _coefficient_root(c, k: int, dom):
    if dom.characteristic:
        return next((r for r in dom.elements() if pow(r, k, dom.characteristic) == c), None)
    num, ok1 = gmpy2.iroot(abs(gmpy2.mpz(c.numerator)), k)
    den, ok2 = gmpy2.iroot(gmpy2.mpz(c.denominator), k)
    if not (ok1 and ok2):
        return None
    root = gmpy2.mpq(num, den)
    if c < 0:
        if k % 2 == 0:
            return None
        root = -root
    return root


def kth_root(g: Poly, k: int) -> Poly | None:
    """h with h^k = g, found term by term from the leading term down, or None."""
    ring = g.ring
    dom = ring.domain
    if not g or k < 1:
        return None
    lm, lc = g.leading_term()
    if any(e % k for e in lm):
        return None
    c = _coefficient_root(lc, k, dom)
    if c is None:
        return None
    h = ring.monomial(tuple(e // k for e in lm), c)
    if dom.characteristic and k % dom.characteristic == 0:
        return None
    # leading term fixed; each further term is read off the remainder
    for _ in range(len(g.terms) * k + 1):
        r = g - h**k
        if not r:
            return h
        rm, rc = r.leading_term()
        base = h ** (k - 1)
        bm, bc = base.leading_term()
        diff = tuple(x - y for x, y in zip(rm, bm))
        if any(x < 0 for x in diff):
            return None
        coeff = dom.div(rc, dom.normalize(bc * k))
        h = h + ring.monomial(diff, coeff)
    return None


def proper_power_generators(relations: Ideal):
    """Generators of the form h^k, k >= 2: a cheap witness that the quotient is not reduced."""
    out = []
    for g in relations.gens:
        for k in range(2, g.degree() + 1):
            if g.degree() % k == 0 and not g.is_constant():
                h = kth_root(g, k)
                if h is not None:
                    out.append((g, h, k))
                    break
    return out
