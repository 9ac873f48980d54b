"""Line-oriented input language.

One statement per line; ``#`` starts a comment.  Declarations::

    ring R = QQ[x,y]                      ring F = GF(5)[x]
    der d on R : x -> -2*y, y -> 3*x^2
    hs h on R order 8 from d              hs h on F order 4 : x -> [1, 0]
    ideal P on R = <x - 1, y>             ideal H = <x^3+y^2-1>      (last ring)
    scheme X = (R, <0>, d)                scheme Y = (R, I, d)
    open U on X = complement <x, y>       open U = D(x)              (last scheme)
    proj V = P(1, QQ, [[1,0],[0,2]])

Commands (any may be prefixed by ``assert``, which turns a false verdict into
a failure)::

    is_differential P d      closure P d      trajectory P d [deg D] [rounds R]
    hs_trajectory P h [deg D] [rounds R]      is_leaf X P      udelta X U
    invariant? X U           cf_laws X U1 U2 ...               proj_leaves V
    constant? X a / b        extend X a / b [order N]
    compare_constants X D(b) {a1/b1, a2/b2} [order N]
    verify lemma43 [order M] verify prop42 N [order M]
    verify thetalemma n      verify hs h
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.domains import QQ, GF
from ..algebra.poly import Poly, Ring
from ..algebra.syntax import PolyParser, TokenStream, tokenize
from ..errors import PolySyntaxError

COMMANDS = (
    "is_differential",
    "closure",
    "trajectory",
    "hs_trajectory",
    "is_leaf",
    "udelta",
    "invariant?",
    "cf_laws",
    "proj_leaves",
    "constant?",
    "extend",
    "compare_constants",
    "verify",
)
DECLARATIONS = ("ring", "der", "hs", "ideal", "scheme", "open", "proj")
VERIFY_TARGETS = ("lemma43", "prop42", "thetalemma", "hs")

# command -> kinds of its name arguments
_SIGNATURES = {
    "is_differential": ("ideal", "der"),
    "closure": ("ideal", "der"),
    "trajectory": ("ideal", "der"),
    "hs_trajectory": ("ideal", "hs"),
    "is_leaf": ("scheme", "ideal"),
    "udelta": ("scheme", "open"),
    "invariant?": ("scheme", "open"),
    "proj_leaves": ("proj",),
}
_OPTIONS = {"trajectory": ("deg", "rounds"), "hs_trajectory": ("deg", "rounds"), "extend": ("order",)}


def _ideal_src(gens) -> str:
    return "<" + ", ".join(str(g) for g in gens) + ">" if gens else "<0>"


def _frac_src(a: Poly, b: Poly) -> str:
    return f"{a} / {b}"


@dataclass(frozen=True)
class RingDecl:
    name: str
    domain: str
    variables: tuple
    line: int = field(default=0, compare=False)

    def to_source(self):
        return f"ring {self.name} = {self.domain}[{','.join(self.variables)}]"


@dataclass(frozen=True)
class DerDecl:
    name: str
    ring: str
    images: tuple  # (variable, Poly)
    line: int = field(default=0, compare=False)

    def to_source(self):
        body = ", ".join(f"{v} -> {p}" for v, p in self.images)
        return f"der {self.name} on {self.ring} : {body}"


@dataclass(frozen=True)
class HsDecl:
    name: str
    ring: str
    order: int
    source: str | None = None
    images: tuple = ()  # (variable, (Poly, ...))
    line: int = field(default=0, compare=False)

    def to_source(self):
        head = f"hs {self.name} on {self.ring} order {self.order}"
        if self.source is not None:
            return f"{head} from {self.source}"
        body = ", ".join(f"{v} -> [{', '.join(str(p) for p in ps)}]" for v, ps in self.images)
        return f"{head} : {body}"


@dataclass(frozen=True)
class IdealDecl:
    name: str
    ring: str
    gens: tuple
    line: int = field(default=0, compare=False)

    def to_source(self):
        return f"ideal {self.name} on {self.ring} = {_ideal_src(self.gens)}"


@dataclass(frozen=True)
class SchemeDecl:
    name: str
    ring: str
    relations: str | tuple  # ideal name or inline generators
    derivation: str
    line: int = field(default=0, compare=False)

    def to_source(self):
        rel = self.relations if isinstance(self.relations, str) else _ideal_src(self.relations)
        return f"scheme {self.name} = ({self.ring}, {rel}, {self.derivation})"


@dataclass(frozen=True)
class OpenDecl:
    name: str
    scheme: str
    gens: tuple
    basic: bool
    line: int = field(default=0, compare=False)

    def to_source(self):
        if self.basic:
            return f"open {self.name} on {self.scheme} = D({self.gens[0]})"
        return f"open {self.name} on {self.scheme} = complement {_ideal_src(self.gens)}"


@dataclass(frozen=True)
class ProjDecl:
    name: str
    n: int
    domain: str
    matrix: tuple  # rows of canonical coefficient strings
    line: int = field(default=0, compare=False)

    def to_source(self):
        rows = ",".join("[" + ",".join(r) + "]" for r in self.matrix)
        return f"proj {self.name} = P({self.n}, {self.domain}, [{rows}])"


@dataclass(frozen=True)
class Command:
    op: str
    names: tuple = ()
    fractions: tuple = ()  # (Poly, Poly)
    base: Poly | None = None  # compare_constants: the b of D(b)
    target: str = ""  # verify: lemma43 / prop42 / thetalemma / hs
    number: int | None = None  # verify prop42 N / thetalemma n
    options: tuple = ()  # (keyword, int)
    asserted: bool = False
    line: int = field(default=0, compare=False)

    def option(self, key, default=None):
        return dict(self.options).get(key, default)

    def to_source(self):
        parts = ["assert"] if self.asserted else []
        parts.append(self.op)
        if self.op == "verify":
            parts.append(self.target)
            if self.number is not None:
                parts.append(str(self.number))
            parts.extend(self.names)
        elif self.op in ("constant?", "extend"):
            parts.append(self.names[0])
            parts.append(_frac_src(*self.fractions[0]))
        elif self.op == "compare_constants":
            parts.append(self.names[0])
            parts.append(f"D({self.base})")
            parts.append("{" + ", ".join(_frac_src(a, b) for a, b in self.fractions) + "}")
        else:
            parts.extend(self.names)
        for k, v in self.options:
            parts.append(f"{k} {v}")
        return " ".join(parts)


@dataclass
class Script:
    statements: list

    def to_source(self) -> str:
        return "".join(s.to_source() + "\n" for s in self.statements)


class _LineParser:
    def __init__(self, table, rings, last):
        self.table = table  # name -> (kind, ring name)
        self.rings = rings  # ring name -> Ring
        self.last = last  # {"ring": name, "scheme": name}

    # -- helpers --------------------------------------------------------
    def name(self, s: TokenStream, what="<name>") -> str:
        return s.expect_kind("ident", what).text

    def ref(self, s: TokenStream, kind: str) -> str:
        tok = s.peek
        name = self.name(s, f"<{kind}>")
        entry = self.table.get(name)
        if entry is None or entry[0] != kind:
            have = f"a {entry[0]}" if entry else "undeclared"
            raise PolySyntaxError(f"{name!r} is {have}, expected a {kind}", tok.line, tok.column, (f"<{kind}>",))
        return name

    def ring_of(self, name: str) -> Ring:
        return self.rings[self.table[name][1]]

    def declare(self, tok, kind, name, ring):
        entry = self.table.get(name)
        if entry is not None and entry[0] == kind:
            raise PolySyntaxError(f"{kind} {name!r} is already declared", tok.line, tok.column)
        self.table[name] = (kind, ring)
        self.last[kind] = name

    def poly(self, s, ring, allow_div=True) -> Poly:
        return PolyParser(s, ring, allow_div).expr()

    def poly_list(self, s, ring, close: str):
        out = []
        if s.at(close):
            s.next()
            return out
        while True:
            out.append(self.poly(s, ring))
            if s.at(","):
                s.next()
                continue
            s.expect(close)
            return out

    def ideal(self, s, ring):
        s.expect("<")
        gens = self.poly_list(s, ring, ">")
        return tuple(g for g in gens if g)

    def fraction(self, s, ring):
        a = self.poly(s, ring, allow_div=False)
        if s.at("/"):
            s.next()
            b = self.poly(s, ring, allow_div=False)
        else:
            b = ring.one
        if not b:
            raise PolySyntaxError("zero denominator", s.peek.line, s.peek.column)
        return a, b

    def domain(self, s):
        tok = s.peek
        if s.at("QQ"):
            s.next()
            return "QQ", QQ
        if s.at("GF"):
            s.next()
            s.expect("(")
            p = s.expect_kind("num", "<prime>")
            s.expect(")")
            try:
                return f"GF({int(p.text)})", GF(int(p.text))
            except ValueError as e:
                raise PolySyntaxError(str(e), p.line, p.column) from None
        s.error("expected a coefficient domain", ("QQ", "GF"))

    def scalar(self, s, dom):
        neg = False
        if s.at("-"):
            s.next()
            neg = True
        num = s.expect_kind("num", "<number>")
        v = dom(int(num.text))
        if s.at("/"):
            s.next()
            den = s.expect_kind("num", "<number>")
            if int(den.text) == 0:
                raise PolySyntaxError("zero denominator", den.line, den.column)
            v = dom.div(v, dom(int(den.text)))
        return dom.normalize(-v) if neg else v

    def options(self, s, allowed):
        out = []
        while s.peek.kind == "ident" and s.peek.text in allowed:
            k = s.next().text
            out.append((k, int(s.expect_kind("num", "<number>").text)))
        return tuple(out)

    # -- statements -----------------------------------------------------
    def statement(self, s: TokenStream, lineno: int):
        tok = s.peek
        if tok.kind != "ident":
            s.error("expected a declaration or command", DECLARATIONS + COMMANDS + ("assert",))
        word = tok.text
        if word in DECLARATIONS:
            s.next()
            return getattr(self, f"decl_{word}")(s, tok, lineno)
        asserted = False
        if word == "assert":
            s.next()
            asserted = True
            tok = s.peek
            word = tok.text
            if tok.kind != "ident" or word not in COMMANDS:
                s.error("expected a command after 'assert'", COMMANDS)
        if word in COMMANDS:
            s.next()
            return self.command(s, word, asserted, lineno)
        s.error("unknown statement", DECLARATIONS + COMMANDS + ("assert",))

    def decl_ring(self, s, tok, lineno):
        name = self.name(s)
        s.expect("=")
        dtext, dom = self.domain(s)
        s.expect("[")
        names = [self.name(s, "<variable>")]
        while s.at(","):
            s.next()
            names.append(self.name(s, "<variable>"))
        s.expect("]")
        if len(set(names)) != len(names):
            raise PolySyntaxError("repeated variable name", tok.line, tok.column)
        self.declare(tok, "ring", name, name)
        self.rings[name] = Ring(names, dom)
        return RingDecl(name, dtext, tuple(names), lineno)

    def decl_der(self, s, tok, lineno):
        name = self.name(s)
        s.expect("on")
        rname = self.ref(s, "ring")
        ring = self.rings[rname]
        s.expect(":")
        images = []
        while True:
            vtok = s.peek
            v = self.name(s, "<variable>")
            if not ring.has_var(v):
                raise PolySyntaxError(f"{v!r} is not a variable of {rname}", vtok.line, vtok.column)
            s.expect("->")
            images.append((v, self.poly(s, ring)))
            if not s.at(","):
                break
            s.next()
        self.declare(tok, "der", name, rname)
        return DerDecl(name, rname, tuple(images), lineno)

    def decl_hs(self, s, tok, lineno):
        name = self.name(s)
        s.expect("on")
        rname = self.ref(s, "ring")
        ring = self.rings[rname]
        s.expect("order")
        order = int(s.expect_kind("num", "<order>").text)
        if s.at("from"):
            s.next()
            src = self.ref(s, "der")
            if self.table[src][1] != rname:
                raise PolySyntaxError(f"{src!r} is not a derivation on {rname}", tok.line, tok.column)
            self.declare(tok, "hs", name, rname)
            return HsDecl(name, rname, order, src, (), lineno)
        s.expect(":")
        images = []
        while True:
            v = self.name(s, "<variable>")
            if not ring.has_var(v):
                raise PolySyntaxError(f"{v!r} is not a variable of {rname}", tok.line, tok.column)
            s.expect("->")
            s.expect("[")
            images.append((v, tuple(self.poly_list(s, ring, "]"))))
            if not s.at(","):
                break
            s.next()
        self.declare(tok, "hs", name, rname)
        return HsDecl(name, rname, order, None, tuple(images), lineno)

    def decl_ideal(self, s, tok, lineno):
        name = self.name(s)
        if s.at("on"):
            s.next()
            rname = self.ref(s, "ring")
        else:
            rname = self.last.get("ring")
            if rname is None:
                s.error("no ring declared yet; use 'ideal NAME on RING = <...>'", ("on",))
        s.expect("=")
        gens = self.ideal(s, self.rings[rname])
        self.declare(tok, "ideal", name, rname)
        return IdealDecl(name, rname, gens, lineno)

    def decl_scheme(self, s, tok, lineno):
        name = self.name(s)
        s.expect("=")
        s.expect("(")
        rname = self.ref(s, "ring")
        s.expect(",")
        if s.at("<"):
            rel = self.ideal(s, self.rings[rname])
        else:
            rel = self.ref(s, "ideal")
            if self.table[rel][1] != rname:
                raise PolySyntaxError(f"ideal {rel!r} is not over {rname}", tok.line, tok.column)
        s.expect(",")
        dname = self.ref(s, "der")
        if self.table[dname][1] != rname:
            raise PolySyntaxError(f"derivation {dname!r} is not over {rname}", tok.line, tok.column)
        s.expect(")")
        self.declare(tok, "scheme", name, rname)
        return SchemeDecl(name, rname, rel, dname, lineno)

    def decl_open(self, s, tok, lineno):
        name = self.name(s)
        if s.at("on"):
            s.next()
            xname = self.ref(s, "scheme")
        else:
            xname = self.last.get("scheme")
            if xname is None:
                s.error("no scheme declared yet; use 'open NAME on SCHEME = ...'", ("on",))
        ring = self.ring_of(xname)
        s.expect("=")
        if s.at("complement"):
            s.next()
            gens = self.ideal(s, ring)
            basic = False
        else:
            s.expect("D")
            s.expect("(")
            gens = (self.poly(s, ring),)
            s.expect(")")
            basic = True
        self.declare(tok, "open", name, self.table[xname][1])
        return OpenDecl(name, xname, tuple(gens), basic, lineno)

    def decl_proj(self, s, tok, lineno):
        name = self.name(s)
        s.expect("=")
        s.expect("P")
        s.expect("(")
        n = int(s.expect_kind("num", "<dimension>").text)
        s.expect(",")
        dtext, dom = self.domain(s)
        s.expect(",")
        s.expect("[")
        rows = []
        while True:
            s.expect("[")
            row = [self.scalar(s, dom)]
            while s.at(","):
                s.next()
                row.append(self.scalar(s, dom))
            s.expect("]")
            rows.append(tuple(dom.fmt(c) for c in row))
            if not s.at(","):
                break
            s.next()
        s.expect("]")
        s.expect(")")
        if len(rows) != n + 1 or any(len(r) != n + 1 for r in rows):
            raise PolySyntaxError(f"matrix must be {n + 1}x{n + 1}", tok.line, tok.column)
        self.declare(tok, "proj", name, None)
        return ProjDecl(name, n, dtext, tuple(rows), lineno)

    def command(self, s, op, asserted, lineno):
        if op == "verify":
            target = s.peek.text
            if s.peek.kind != "ident" or target not in VERIFY_TARGETS:
                s.error("unknown verification", VERIFY_TARGETS)
            s.next()
            number = None
            names = ()
            if target in ("prop42", "thetalemma"):
                number = int(s.expect_kind("num", "<number>").text)
            if target == "hs":
                names = (self.ref(s, "hs"),)
            opts = self.options(s, ("order",)) if target in ("lemma43", "prop42") else ()
            return Command(op, names, target=target, number=number, options=opts, asserted=asserted, line=lineno)
        if op in ("constant?", "extend"):
            x = self.ref(s, "scheme")
            frac = self.fraction(s, self.ring_of(x))
            opts = self.options(s, _OPTIONS.get(op, ()))
            return Command(op, (x,), (frac,), options=opts, asserted=asserted, line=lineno)
        if op == "compare_constants":
            x = self.ref(s, "scheme")
            ring = self.ring_of(x)
            s.expect("D")
            s.expect("(")
            base = self.poly(s, ring)
            s.expect(")")
            s.expect("{")
            fracs = []
            if not s.at("}"):
                while True:
                    fracs.append(self.fraction(s, ring))
                    if not s.at(","):
                        break
                    s.next()
            s.expect("}")
            opts = self.options(s, ("order",))
            return Command(op, (x,), tuple(fracs), base=base, options=opts, asserted=asserted, line=lineno)
        if op == "cf_laws":
            x = self.ref(s, "scheme")
            names = [x]
            while s.peek.kind == "ident":
                names.append(self.ref(s, "open"))
            return Command(op, tuple(names), asserted=asserted, line=lineno)
        names = tuple(self.ref(s, kind) for kind in _SIGNATURES[op])
        opts = self.options(s, _OPTIONS.get(op, ()))
        return Command(op, names, options=opts, asserted=asserted, line=lineno)


def _strip_comment(text: str) -> str:
    i = text.find("#")
    return text if i < 0 else text[:i]


def parse(source: str) -> Script:
    """Parse a whole script; raises PolySyntaxError with line and column on the first error."""
    p = _LineParser({}, {}, {})
    statements = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        text = _strip_comment(raw)
        if not text.strip():
            continue
        s = TokenStream(tokenize(text, lineno))
        stmt = p.statement(s, lineno)
        if s.peek.kind != "eof":
            s.error("unexpected trailing input", ("<end of line>",))
        statements.append(stmt)
    return Script(statements)
