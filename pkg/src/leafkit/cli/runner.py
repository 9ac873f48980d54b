"""Execute parsed scripts and format the report."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.derivation import Derivation
from ..algebra.domains import parse_domain
from ..algebra.poly import Ring
from ..algebra.hasse import HasseSchmidtDerivation, hs_from_derivation
from ..constants import (
    DEFAULT_EXTENSION_ORDER,
    constants_comparison_report,
    extend_constant,
    format_fraction,
    is_constant_fraction,
    verify_lemma_4_3,
    verify_prop_4_2,
    verify_theta_lemma,
)
from ..differential import DEFAULT_MAX_ROUNDS, diff_closure, hs_trajectory, is_differential_ideal, trajectory
from ..errors import LeafkitError
from ..groebner import Ideal
from ..schemes import (
    OpenSet,
    ProjectiveVectorField,
    cf_topology_laws,
    is_invariant_open,
    is_leaf,
    make_affine,
    projective_rational_leaves,
    u_delta,
)
from .parser import (
    Command,
    DerDecl,
    HsDecl,
    IdealDecl,
    OpenDecl,
    ProjDecl,
    RingDecl,
    SchemeDecl,
    Script,
)


@dataclass
class Config:
    deg: int | None = None
    rounds: int = DEFAULT_MAX_ROUNDS
    jet_order: int | None = None


@dataclass
class Result:
    index: int
    line: int
    name: str
    value: str = ""
    certificate: str = ""
    status: str = "ok"  # ok / failed / error
    error: str = ""
    details: list = field(default_factory=list)
    proof: list = field(default_factory=list)  # cofactor certificates, shown on request

    def text(self) -> str:
        if self.status == "error":
            return f"{self.name}: error: {self.error} [command {self.index}, line {self.line}]"
        out = f"{self.name}: {self.value}"
        if self.certificate:
            out += f" [{self.certificate}]"
        if self.status == "failed":
            out += f" FAILED [command {self.index}, line {self.line}]"
        return out

    def as_dict(self):
        d = {
            "index": self.index,
            "line": self.line,
            "name": self.name,
            "value": self.value,
            "certificate": self.certificate,
            "status": self.status,
        }
        if self.error:
            d["error"] = self.error
        if self.details:
            d["details"] = list(self.details)
        if self.proof:
            d["proof"] = list(self.proof)
        return d


def _tf(b) -> str:
    return "true" if b else "false"


class Session:
    """Named objects declared so far, by kind."""

    def __init__(self, config: Config | None = None):
        self.config = config or Config()
        self.rings = {}
        self.ders = {}
        self.hss = {}
        self.ideals = {}
        self.schemes = {}
        self.opens = {}
        self.projs = {}

    # -- declarations ---------------------------------------------------
    def declare(self, st):
        if isinstance(st, RingDecl):
            self.rings[st.name] = Ring(st.variables, parse_domain(st.domain))
        elif isinstance(st, DerDecl):
            ring = self.rings[st.ring]
            self.ders[st.name] = Derivation.from_mapping(ring, dict(st.images))
        elif isinstance(st, HsDecl):
            ring = self.rings[st.ring]
            if st.source is not None:
                self.hss[st.name] = hs_from_derivation(self.ders[st.source], st.order)
            else:
                self.hss[st.name] = HasseSchmidtDerivation.from_mapping(ring, st.order, dict(st.images))
        elif isinstance(st, IdealDecl):
            self.ideals[st.name] = Ideal(self.rings[st.ring], st.gens)
        elif isinstance(st, SchemeDecl):
            ring = self.rings[st.ring]
            rel = self.ideals[st.relations] if isinstance(st.relations, str) else Ideal(ring, st.relations)
            self.schemes[st.name] = make_affine(ring, rel, self.ders[st.derivation])
        elif isinstance(st, OpenDecl):
            X = self.schemes[st.scheme]
            self.opens[st.name] = OpenSet(X, Ideal(X.ring, st.gens))
        elif isinstance(st, ProjDecl):
            dom = parse_domain(st.domain)
            self.projs[st.name] = ProjectiveVectorField(dom, st.n, [[dom(c) for c in row] for row in st.matrix])

    # -- commands ---------------------------------------------------------
    def run_command(self, c: Command, res: Result):
        """Fill ``res``; returns the boolean verdict for asserted commands, else None."""
        return getattr(self, "cmd_" + c.op.rstrip("?"))(c, res)

    def cmd_is_differential(self, c, res):
        I, d = self.ideals[c.names[0]], self.ders[c.names[1]]
        v = is_differential_ideal(I, d)
        res.value = _tf(v)
        if not v:
            g = next(g for g in I.gens if not I.contains(d(g)))
            res.certificate = f"d({g}) = {d(g)} not in {c.names[0]}"
        return v

    def cmd_closure(self, c, res):
        r = diff_closure(self.ideals[c.names[0]], self.ders[c.names[1]])
        res.value = r.closure.canonical()
        res.certificate = f"rounds={r.rounds}"

    def _bounds(self, c):
        deg = c.option("deg", self.config.deg)
        rounds = c.option("rounds", self.config.rounds)
        return deg, rounds

    def cmd_trajectory(self, c, res):
        deg, rounds = self._bounds(c)
        t = trajectory(self.ideals[c.names[0]], self.ders[c.names[1]], deg, rounds)
        res.value = t.candidate.canonical()
        res.certificate = t.certificate()[1:-1]
        return t.exact

    def cmd_hs_trajectory(self, c, res):
        deg, rounds = self._bounds(c)
        t = hs_trajectory(self.ideals[c.names[0]], self.hss[c.names[1]], deg, rounds)
        res.value = t.candidate.canonical()
        res.certificate = t.certificate()[1:-1]
        return t.exact

    def cmd_is_leaf(self, c, res):
        v = is_leaf(self.schemes[c.names[0]], self.ideals[c.names[1]])
        res.value = _tf(v)
        return v

    def cmd_udelta(self, c, res):
        X = self.schemes[c.names[0]]
        U = u_delta(X, self.opens[c.names[1]])
        res.value = f"complement {U.complement.canonical()}"
        if U.is_whole():
            res.certificate = "whole space"
        elif U.is_empty():
            res.certificate = "empty set"
        return True

    def cmd_invariant(self, c, res):
        v = is_invariant_open(self.schemes[c.names[0]], self.opens[c.names[1]])
        res.value = _tf(v)
        return v

    def cmd_cf_laws(self, c, res):
        X = self.schemes[c.names[0]]
        rep = cf_topology_laws(X, [self.opens[n] for n in c.names[1:]])
        res.value = _tf(rep.holds)
        res.certificate = f"union: {_tf(rep.union_law)}, intersection: {_tf(rep.intersection_law)}, family size {rep.size}"
        return rep.holds

    def cmd_proj_leaves(self, c, res):
        rep = projective_rational_leaves(self.projs[c.names[0]])
        res.value = rep.describe()
        tag = "all verified" if all(p.verified for p in rep.leaves) else "UNVERIFIED leaf"
        res.certificate = f"charpoly {rep.charpoly}, {tag}"
        res.details = [f"{p} eigenvalue {p.domain.fmt(p.eigenvalue)} chart {p.chart}" for p in rep.leaves]
        return rep.ok

    def cmd_constant(self, c, res):
        a, b = c.fractions[0]
        v = is_constant_fraction(self.schemes[c.names[0]], a, b)
        res.value = _tf(v)
        return v

    def cmd_extend(self, c, res):
        a, b = c.fractions[0]
        e = extend_constant(self.schemes[c.names[0]], a, b, c.option("order", DEFAULT_EXTENSION_ORDER))
        res.value = str(e.section)
        tag = "covers D(b)^delta" if e.covers_delta else "partial cover of D(b)^delta"
        res.certificate = f"{tag}, orders<={e.max_order}, {e.certificate.to_text()}"
        return e.covers_delta

    def cmd_compare_constants(self, c, res):
        rep = constants_comparison_report(
            self.schemes[c.names[0]], c.base, c.fractions, c.option("order", DEFAULT_EXTENSION_ORDER)
        )
        res.value = _tf(rep.ok)
        res.certificate = f"{len(rep.entries)} fractions"
        res.details = [str(e) for e in rep.entries]
        return rep.ok

    def cmd_verify(self, c, res):
        jo = self.config.jet_order
        if c.target == "lemma43":
            cert = verify_lemma_4_3(c.option("order", jo or 2))
            res.value = _tf(cert.holds)
            res.certificate = f"M={cert.certificate.params[0][1]}, cofactors of Theta^(0..1) replayed"
            res.proof = cert.certificate.to_text().splitlines()
            return cert.holds
        if c.target == "prop42":
            N = c.number
            pc = verify_prop_4_2(N, c.option("order", jo or N + 2))
            res.value = _tf(pc.holds)
            res.certificate = f"M={pc.order}, i=0..{N} replayed, recurrence {'exact' if pc.recurrence_exact else 'FAILED'}"
            for cert in pc.certificates:
                res.proof.extend(cert.to_text().splitlines())
            return pc.holds
        if c.target == "thetalemma":
            certs = verify_theta_lemma(c.number)
            ok = all(x.replay() for x in certs)
            res.value = _tf(ok)
            res.certificate = f"n=0..{c.number} replayed"
            for cert in certs:
                res.proof.extend(cert.to_text().splitlines())
            return ok
        h = self.hss[c.names[0]]
        gens = h.ring.gens
        pairs = [(f, g) for i, f in enumerate(gens) for g in gens[i:]]
        it = h.iterativity_failures()
        lb = h.leibniz_failures(pairs)
        ident = all(h.apply_all(g)[0] == g for g in gens)
        ok = ident and not it and not lb
        res.value = _tf(ok)
        res.certificate = f"M={h.order}, D_0 identity, Leibniz on {len(pairs)} products, iterativity on {len(gens)} generators"
        return ok


def _label(st) -> str:
    if isinstance(st, Command):
        c = st
        if c.op == "verify":
            arg = f" {c.number}" if c.number is not None else ""
            arg += "".join(f" {n}" for n in c.names)
            return f"verify {c.target}{arg}"
        if c.op in ("constant?", "extend"):
            return f"{c.op}({c.names[0]},{format_fraction(*c.fractions[0])})"
        if c.op == "compare_constants":
            return f"{c.op}({c.names[0]},D({c.base}))"
        return f"{c.op}({','.join(c.names)})"
    kind = type(st).__name__[: -len("Decl")].lower()
    return f"{kind} {st.name}"


def run(script: Script, config: Config | None = None):
    """Execute statements in order; returns (results, exit_code)."""
    session = Session(config)
    results = []
    code = 0
    for index, st in enumerate(script.statements, start=1):
        name = _label(st)
        if not isinstance(st, Command):
            try:
                session.declare(st)
            except (LeafkitError, ValueError, KeyError) as e:
                results.append(Result(index, st.line, name, status="error", error=_message(e)))
                code = 1
            continue
        res = Result(index, st.line, name)
        try:
            verdict = session.run_command(st, res)
            if st.asserted and not verdict:
                res.status = "failed"
                code = 1
        except (LeafkitError, ValueError, KeyError) as e:
            res.status = "error"
            res.error = _message(e)
            code = 1
        results.append(res)
    return results, code


def _message(e) -> str:
    if isinstance(e, KeyError):
        return f"{e.args[0]!r} is not available (its declaration failed)"
    return str(e)
