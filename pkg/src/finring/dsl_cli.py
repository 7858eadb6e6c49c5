"""Script language, check registry, catalog generator, and CLI.

A script is a list of ';'-terminated statements: definitions binding names to
ring, ideal, or hom expressions, and check requests that dispatch into the
verification ops. The grammar is deliberately closed (no user functions, no
arithmetic) so that a script is a reproducible description of instances: the
canonical renderer turns an AST back into the one source text that parses to
it, and the evaluator caches values by rendered form, which makes repeated
checks on one instance cheap and report order independent of caching.

Exit codes: 0 when no check fails, 1 when any check fails, 2 for usage,
parse, or name errors. Precondition violations inside a check (guard
exceeded, non-prime ideal, hypothesis not satisfied) become reports with
status hypothesis_not_met rather than run failures.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import config
from .amalgamation import (
    alt_pullback_checks,
    amalgam,
    canonical_isos,
    domain_criterion_check,
    dorroh_check,
    duplication,
    factor_check,
    iter_iso_check,
    kernel_identity_check,
    pull_identity_check,
    pullback_reduced_check,
    reduced_converse_search,
    reduced_criterion_check,
    retraction_criterion_check,
    retraction_roundtrip,
    same_amalgam,
    split_sequence_check,
    verify_iso,
)
from .constructions import (
    cpi_ideal,
    cpi_prime,
    d_plus_m,
    nagata_as_amalgam_check,
    noetherian_report,
    noetherian_verdict_xjx,
    trunc_poly_amalgam,
)
from .errors import (
    EvaluationError,
    FinringError,
    ScriptSyntaxError,
    TypeMismatch,
    UnknownName,
)
from .morphisms import RingHom, enumerate_homs, identity_hom
from .reports import (
    FAIL,
    HYPOTHESIS_NOT_MET,
    PASS,
    VerificationReport,
    reports_to_json,
)
from .rings import FiniteRng, direct_product, galois_field, trunc_poly, zmod
from .subobjects import (
    all_ideals,
    ideal_as_rng,
    ideal_from_generators,
    module_via_hom,
    subring_generated,
)


# -- tokens ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    type: str
    value: str
    line: int
    col: int


_PUNCT = {"(": "LPAREN", ")": "RPAREN", ",": "COMMA", ";": "SEMI", "=": "EQUALS"}


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch == "-" and i + 1 < n and text[i + 1] == ">":
            tokens.append(Token("ARROW", "->", line, start_col))
            i += 2
            col += 2
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch == '"':
            j = i + 1
            while j < n and text[j] not in '"\n':
                j += 1
            if j >= n or text[j] != '"':
                raise ScriptSyntaxError("unterminated string", line, start_col,
                                        ('"',))
            tokens.append(Token("STRING", text[i + 1:j], line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("NUMBER", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("NAME", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        raise ScriptSyntaxError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# -- AST ------------------------------------------------------------------------------


RING, IDEAL, HOM, SUBRING, AMALGAM, INT = (
    "ring", "ideal", "hom", "subring", "amalgam", "int",
)


def _label_token(label: str) -> str:
    return label if label.isdigit() else '"' + label + '"'


@dataclass(frozen=True)
class Expr:
    """One expression node. `form` picks the constructor, `kind` is its
    static type, `args` holds child Exprs, ints, or label strings."""

    form: str
    kind: str
    args: tuple
    line: int
    col: int

    def render(self) -> str:
        a = self.args
        if self.form == "ref":
            return a[0]
        if self.form == "int":
            return str(a[0])
        if self.form == "zmod":
            return f"zmod({a[0]})"
        if self.form == "gf":
            return f"gf({a[0]})"
        if self.form == "product":
            return f"product({a[0].render()}, {a[1].render()})"
        if self.form == "trunc_poly":
            return f"trunc_poly({a[0].render()}, {a[1]}, {a[2]})"
        if self.form == "gen":
            elems = ", ".join(_label_token(x) for x in a[1])
            return f"gen({a[0].render()}; {elems})"
        if self.form == "map":
            images = ", ".join(str(x) for x in a[2])
            return f"map({a[0].render()} -> {a[1].render()}; {images})"
        if self.form == "id":
            return f"id({a[0].render()})"
        if self.form == "sub":
            if a[1]:
                elems = ", ".join(_label_token(x) for x in a[1])
                return f"sub({a[0].render()}; {elems})"
            return f"sub({a[0].render()})"
        if self.form == "dup":
            return f"dup({a[0].render()}, {a[1].render()})"
        if self.form == "amalg":
            return f"amalg({a[0].render()}, {a[1].render()})"
        raise AssertionError(f"unrenderable form {self.form}")


@dataclass(frozen=True)
class Definition:
    kind: str
    name: str
    expr: Expr
    line: int


@dataclass(frozen=True)
class CheckStmt:
    name: str
    args: tuple[Expr, ...]
    line: int
    col: int

    def render(self) -> str:
        inner = ", ".join(a.render() for a in self.args)
        return f"check {self.name}({inner});"


@dataclass(frozen=True)
class Script:
    definitions: tuple[Definition, ...]
    checks: tuple[CheckStmt, ...]

    def render(self) -> str:
        lines = [
            f"{d.kind} {d.name} = {d.expr.render()};" for d in self.definitions
        ]
        lines += [c.render() for c in self.checks]
        return "\n".join(lines) + "\n"


# -- parser ---------------------------------------------------------------------------


_EXPR_FORMS = {
    "zmod": RING, "gf": RING, "product": RING, "trunc_poly": RING,
    "gen": IDEAL, "map": HOM, "id": HOM, "sub": SUBRING,
    "dup": AMALGAM, "amalg": AMALGAM,
}

_DEF_KINDS = (RING, IDEAL, HOM)


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.env: dict[str, str] = {}

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, type_: str, what: str) -> Token:
        tok = self.peek()
        if tok.type != type_:
            raise ScriptSyntaxError(
                f"found {tok.value!r}" if tok.type != "EOF" else "unexpected end",
                tok.line, tok.col, (what,),
            )
        return self.next()

    def parse(self) -> Script:
        defs: list[Definition] = []
        checks: list[CheckStmt] = []
        while self.peek().type != "EOF":
            tok = self.peek()
            if tok.type != "NAME":
                raise ScriptSyntaxError(
                    f"found {tok.value!r}", tok.line, tok.col,
                    ("ring", "ideal", "hom", "check"),
                )
            if tok.value in _DEF_KINDS:
                defs.append(self.definition())
            elif tok.value == "check":
                checks.append(self.check_stmt())
            else:
                raise ScriptSyntaxError(
                    f"found {tok.value!r}", tok.line, tok.col,
                    ("ring", "ideal", "hom", "check"),
                )
        return Script(tuple(defs), tuple(checks))

    def definition(self) -> Definition:
        kw = self.next()
        name_tok = self.expect("NAME", "name")
        if name_tok.value in self.env or name_tok.value in _EXPR_FORMS \
                or name_tok.value in _DEF_KINDS or name_tok.value == "check":
            raise ScriptSyntaxError(
                f"name {name_tok.value!r} is already taken",
                name_tok.line, name_tok.col,
            )
        self.expect("EQUALS", "=")
        expr = self.expression()
        if expr.kind != kw.value:
            article = "an" if expr.kind[0] in "ai" else "a"
            raise TypeMismatch(
                f"line {name_tok.line}: {kw.value} {name_tok.value} is bound "
                f"to {article} {expr.kind} expression"
            )
        self.expect("SEMI", ";")
        self.env[name_tok.value] = kw.value
        return Definition(kw.value, name_tok.value, expr, kw.line)

    def check_stmt(self) -> CheckStmt:
        kw = self.next()
        name_tok = self.expect("NAME", "check name")
        spec = REGISTRY.get(name_tok.value)
        if spec is None:
            raise UnknownName(
                f"line {name_tok.line}: unknown check {name_tok.value!r}"
            )
        self.expect("LPAREN", "(")
        args: list[Expr] = []
        if self.peek().type != "RPAREN":
            args.append(self.expression())
            while self.peek().type == "COMMA":
                self.next()
                args.append(self.expression())
        self.expect("RPAREN", ")")
        self.expect("SEMI", ";")
        kinds = [a.kind for a in args]
        if not spec.accepts(kinds):
            raise TypeMismatch(
                f"line {name_tok.line}: {name_tok.value} expects "
                f"({spec.signature()}), got ({', '.join(kinds) or 'nothing'})"
            )
        return CheckStmt(name_tok.value, tuple(args), kw.line, kw.col)

    def expression(self) -> Expr:
        tok = self.peek()
        if tok.type == "NUMBER":
            self.next()
            return Expr("int", INT, (int(tok.value),), tok.line, tok.col)
        name = self.expect("NAME", "expression").value
        if name in _EXPR_FORMS:
            return self.form_expr(name, tok)
        kind = self.env.get(name)
        if kind is None:
            raise UnknownName(f"line {tok.line}: unknown name {name!r}")
        return Expr("ref", kind, (name,), tok.line, tok.col)

    def form_expr(self, form: str, tok: Token) -> Expr:
        self.expect("LPAREN", "(")
        kind = _EXPR_FORMS[form]
        if form in ("zmod", "gf"):
            n = int(self.expect("NUMBER", "number").value)
            args: tuple = (n,)
        elif form == "product":
            left = self.typed_expression(RING)
            self.expect("COMMA", ",")
            right = self.typed_expression(RING)
            args = (left, right)
        elif form == "trunc_poly":
            ring = self.typed_expression(RING)
            self.expect("COMMA", ",")
            nv = int(self.expect("NUMBER", "variable count").value)
            self.expect("COMMA", ",")
            deg = int(self.expect("NUMBER", "degree bound").value)
            args = (ring, nv, deg)
        elif form == "gen":
            ring = self.typed_expression(RING)
            self.expect("SEMI", ";")
            args = (ring, self.label_list())
        elif form == "map":
            dom = self.typed_expression(RING)
            self.expect("ARROW", "->")
            cod = self.typed_expression(RING)
            self.expect("SEMI", ";")
            images = [int(self.expect("NUMBER", "image index").value)]
            while self.peek().type == "COMMA":
                self.next()
                images.append(int(self.expect("NUMBER", "image index").value))
            args = (dom, cod, tuple(images))
        elif form == "id":
            args = (self.typed_expression(RING),)
        elif form == "sub":
            ring = self.typed_expression(RING)
            labels: tuple[str, ...] = ()
            if self.peek().type == "SEMI":
                self.next()
                labels = self.label_list()
            args = (ring, labels)
        elif form == "dup":
            ring = self.typed_expression(RING)
            self.expect("COMMA", ",")
            args = (ring, self.typed_expression(IDEAL))
        elif form == "amalg":
            hom = self.typed_expression(HOM)
            self.expect("COMMA", ",")
            args = (hom, self.typed_expression(IDEAL))
        else:
            raise AssertionError(form)
        self.expect("RPAREN", ")")
        return Expr(form, kind, args, tok.line, tok.col)

    def typed_expression(self, kind: str) -> Expr:
        expr = self.expression()
        if expr.kind != kind:
            raise TypeMismatch(
                f"line {expr.line}: expected a {kind} expression, "
                f"got a {expr.kind} one"
            )
        return expr

    def label_list(self) -> tuple[str, ...]:
        labels = [self.label()]
        while self.peek().type == "COMMA":
            self.next()
            labels.append(self.label())
        return tuple(labels)

    def label(self) -> str:
        tok = self.peek()
        if tok.type in ("NUMBER", "STRING"):
            self.next()
            return tok.value
        raise ScriptSyntaxError(
            f"found {tok.value!r}", tok.line, tok.col,
            ("element label", "quoted label"),
        )


def parse(text: str) -> Script:
    """Script text to AST. Raises ScriptSyntaxError, UnknownName, or
    TypeMismatch with 1-based source locations."""
    return _Parser(text).parse()


# -- evaluation -----------------------------------------------------------------------


class Evaluator:
    """Builds values for expressions, memoized by canonical rendering so a
    ring or amalgam referenced by many checks is constructed once."""

    def __init__(self, definitions: tuple[Definition, ...]):
        self.defs = {d.name: d.expr for d in definitions}
        self.cache: dict[str, object] = {}

    def value(self, expr: Expr):
        key = expr.render()
        if key in self.cache:
            return self.cache[key]
        val = self._build(expr)
        self.cache[key] = val
        return val

    def _build(self, expr: Expr):
        form, a = expr.form, expr.args
        if form == "ref":
            return self.value(self.defs[a[0]])
        if form == "int":
            return a[0]
        if form == "zmod":
            return zmod(a[0])
        if form == "gf":
            return galois_field(a[0])
        if form == "product":
            return direct_product([self.value(a[0]), self.value(a[1])])
        if form == "trunc_poly":
            return trunc_poly(self.value(a[0]), a[1], a[2])
        if form == "gen":
            ring = self.value(a[0])
            return ideal_from_generators(
                ring, [ring.index_of(lab) for lab in a[1]]
            )
        if form == "map":
            dom, cod = self.value(a[0]), self.value(a[1])
            return RingHom(dom, cod, np.array(a[2], dtype=np.int64),
                           unital=True, name="map")
        if form == "id":
            return identity_hom(self.value(a[0]))
        if form == "sub":
            ring = self.value(a[0])
            return subring_generated(
                ring, [ring.index_of(lab) for lab in a[1]], include_one=True
            )
        if form == "dup":
            return duplication(self.value(a[0]), self.value(a[1]))
        if form == "amalg":
            return amalgam(self.value(a[0]), self.value(a[1]))
        raise AssertionError(form)


# -- check registry -------------------------------------------------------------------


@dataclass(frozen=True)
class CheckSpec:
    """Registry entry: argument kinds (variadic repeats the last), a one-line
    summary, the property statement `explain` prints, and the runner."""

    name: str
    params: tuple[str, ...]
    variadic: bool
    summary: str
    statement: str
    runner: object = field(repr=False, default=None)

    def accepts(self, kinds: list[str]) -> bool:
        if self.variadic:
            if len(kinds) < len(self.params):
                return False
            head = kinds[: len(self.params) - 1]
            tail = kinds[len(self.params) - 1:]
            return list(self.params[:-1]) == head and all(
                k == self.params[-1] for k in tail
            )
        return list(self.params) == kinds

    def signature(self) -> str:
        sig = ", ".join(self.params)
        return sig + ", ..." if self.variadic else sig


def _run_cardinality(vals, instance: str) -> VerificationReport:
    am = vals[0]
    rep = VerificationReport("cardinality", instance, PASS)
    rep.add("base_order", am.base.order)
    rep.add("ideal_order", am.ideal.size)
    rep.add("amalgam_order", am.ring.order)
    exact = am.ring.order == am.base.order * am.ideal.size
    rep.add("product_law_exact", exact)
    enc = am.pairs[:, 0] * am.target.order + am.pairs[:, 1]
    graph = np.arange(am.base.order, dtype=np.int64) * am.target.order \
        + am.hom.map
    graph_in = bool(np.isin(graph, enc).all())
    rep.add("graph_contained", graph_in)
    rep.add("graph_embedding_injective", am.embed.is_injective)
    if not (exact and graph_in and am.embed.is_injective):
        rep.status = FAIL
        rep.counterexample = "order law or graph containment violated"
    return rep


def _run_dotted_presentation(vals, instance: str) -> VerificationReport:
    am = vals[0]
    rep = VerificationReport("dotted_presentation", instance, PASS)
    split = split_sequence_check(am.dotted)
    for w in split.witnesses:
        rep.add(w.name, w.value)
    iso_ok = verify_iso(am.dotted_iso)
    rep.add("transport_iso_valid", iso_ok)
    if split.status != PASS or not iso_ok:
        rep.status = FAIL
        rep.counterexample = split.counterexample or "transport iso invalid"
    return rep


def _run_dorroh(vals, instance: str) -> VerificationReport:
    part, _ = ideal_as_rng(vals[0])
    return dorroh_check(part, None, instance)


def _run_nagata(vals, instance: str) -> VerificationReport:
    f, J = vals
    M = module_via_hom(f, J)
    return nagata_as_amalgam_check(f.domain, M, instance)


def _run_d_plus_m(vals, instance: str) -> VerificationReport:
    sub = vals[0]
    _, rep = d_plus_m(sub.ring, sub, list(vals[1:]), instance)
    return rep


def _run_cpi_prime(vals, instance: str) -> VerificationReport:
    _, rep = cpi_prime(vals[0], vals[1], instance)
    return rep


def _run_cpi_ideal(vals, instance: str) -> VerificationReport:
    _, rep = cpi_ideal(vals[0], vals[1], instance)
    return rep


def _run_trunc_poly_amalgam(vals, instance: str) -> VerificationReport:
    sub, J, nv, deg = vals
    _, rep = trunc_poly_amalgam(sub, sub.ring, J, nv, deg, instance)
    return rep


def _run_noetherian_xjx(vals, instance: str) -> VerificationReport:
    sub, J = vals
    return noetherian_verdict_xjx(sub, sub.ring, J, instance)


def _spec(name, params, summary, statement, runner, variadic=False):
    return CheckSpec(name, tuple(params), variadic, summary, statement, runner)


REGISTRY: dict[str, CheckSpec] = {
    s.name: s
    for s in [
        _spec(
            "cardinality", (AMALGAM,),
            "order of an amalgam is |A| * |J|",
            "The amalgam of f: A -> B along an ideal J of B is the subring\n"
            "{(a, f(a)+j)} of A x B. The assignment (a, j) -> (a, f(a)+j) is\n"
            "injective, so the order equals |A| * |J| exactly, and the graph\n"
            "{(a, f(a))} sits inside it as the j = 0 slice.",
            _run_cardinality,
        ),
        _spec(
            "dotted_presentation", (AMALGAM,),
            "amalgam carries a split extension of A by J",
            "On A x J with product (a,x)(a',x') = (aa', a.x' + a'.x + xx')\n"
            "transported through f, the amalgam splits: the base embeds, J\n"
            "embeds as an ideal, the base projection retracts the embedding,\n"
            "and the explicit coordinate map onto the pair form is a bijective\n"
            "hom.",
            _run_dotted_presentation,
        ),
        _spec(
            "pull_identity", (AMALGAM,),
            "amalgam equals the fiber product over B/J",
            "Let pi: B -> B/J be the projection and f' = pi o f. The amalgam\n"
            "of f along J has exactly the element set {(a,b) : f'(a) = pi(b)}\n"
            "and the same operation tables: it is that fiber product, not\n"
            "merely isomorphic to it.",
            lambda vals, inst: pull_identity_check(vals[0], inst),
        ),
        _spec(
            "alt_pullbacks", (AMALGAM,),
            "two further fiber-product presentations collapse onto the amalgam",
            "The amalgam is also the fiber product of u: a -> (a, f(a)+J)\n"
            "against v: (a,b) -> (a, b+J) over A x B/J, and of the maps these\n"
            "induce over A/I x B/J with I the preimage of J. Both collapse\n"
            "maps are validated as bijective homs.",
            lambda vals, inst: alt_pullback_checks(vals[0], inst),
        ),
        _spec(
            "canonical_isos", (AMALGAM,),
            "the four quotient presentations of an amalgam",
            "Writing I for the preimage of J: the amalgam modulo the embedded\n"
            "ideal {(i, f(i)+j)} is A/I; modulo {0} x J it is A; modulo\n"
            "I x {0} it is f(A)+J; modulo I x J it is (f(A)+J)/J, and B/J\n"
            "when f is surjective. Each is verified through its explicit\n"
            "induced map.",
            lambda vals, inst: canonical_isos(vals[0], None, inst),
        ),
        _spec(
            "reduced_criterion", (AMALGAM,),
            "amalgam reduced iff base reduced and Nilp(B) meets J trivially",
            "The amalgam has no nonzero nilpotents exactly when A has none\n"
            "and no nonzero nilpotent of B lies in J. When J is radical and\n"
            "the amalgam is reduced, B itself must be reduced; the check\n"
            "verifies the equivalence and that corollary on the instance.",
            lambda vals, inst: reduced_criterion_check(vals[0], inst),
        ),
        _spec(
            "domain_criterion", (AMALGAM,),
            "amalgam a domain iff f(A)+J is and the preimage of J is zero",
            "For nonzero J the amalgam is an integral domain exactly when\n"
            "f(A)+J is one and f^{-1}(J) = 0. Finite instances make both\n"
            "sides provably false (a finite domain is a field, and a field\n"
            "has no proper nonzero ideal), so the equivalence is exercised\n"
            "in its degenerate regime and the degeneracy is reported.",
            lambda vals, inst: domain_criterion_check(vals[0], inst),
        ),
        _spec(
            "same_amalgam", (HOM, HOM, IDEAL),
            "two homs give one amalgam iff they agree modulo the ideal",
            "For f, g: A -> B and an ideal J of B, the element sets\n"
            "{(a, f(a)+j)} and {(a, g(a)+j)} coincide exactly when\n"
            "f(a) - g(a) lies in J for every a. Both sides are computed\n"
            "independently and compared.",
            lambda vals, inst: same_amalgam(vals[0], vals[1], vals[2], inst),
        ),
        _spec(
            "iterated_iso", (HOM, IDEAL, INT),
            "the n-fold amalgam is a duplication of the (n-1)-fold one",
            "Amalgamating the diagonal map into B^n along J^n gives a ring of\n"
            "order |A| * |J|^n, and the coordinate shuffle\n"
            "(a,(b_1..b_n)) -> ((a,(b_1..b_{n-1})), (a,(b_1..b_{n-2},b_n)))\n"
            "identifies it with the duplication of the (n-1)-fold amalgam\n"
            "along its embedded copy of J. The shuffle is validated as a\n"
            "bijective hom.",
            lambda vals, inst: iter_iso_check(vals[0], vals[1], vals[2], inst),
        ),
        _spec(
            "retraction_roundtrip", (AMALGAM,),
            "an amalgam re-entered as a pullback yields a section and J",
            "Present the amalgam as the fiber product of the induced map to\n"
            "B/J against the projection. The left projection admits a\n"
            "section (a -> (a, f(a)) gives one), and composing the section\n"
            "with the right projection recovers a hom whose amalgam along\n"
            "Ker(projection) = J is the original element set.",
            lambda vals, inst: retraction_roundtrip(vals[0], None, inst),
        ),
        _spec(
            "retraction_criterion", (HOM, HOM),
            "a pullback is an amalgam of its left ring iff a section exists",
            "For the fiber product of alpha: A -> C and beta: B -> C, the\n"
            "left projection admitting a section is equivalent to the\n"
            "pullback being the amalgam of some f: A -> B along Ker(beta).\n"
            "A found section rebuilds (f, J) and the sets are compared; a\n"
            "certified fruitless search is cross-checked by exhausting every\n"
            "(hom, ideal) presentation.",
            lambda vals, inst: retraction_criterion_check(
                vals[0], vals[1], None, inst
            ),
        ),
        _spec(
            "pullback_presentation", (HOM, HOM, HOM),
            "pullback of (alpha, beta) is an amalgam along f iff alpha = beta o f",
            "The fiber product of alpha: A -> C and beta: B -> C equals the\n"
            "amalgam of f: A -> B along some ideal exactly when\n"
            "alpha = beta o f, and the ideal is then Ker(beta). The negative\n"
            "direction is certified by exhausting all ideals of B.",
            lambda vals, inst: factor_check(vals[0], vals[1], vals[2], inst),
        ),
        _spec(
            "pullback_reduced", (HOM, HOM),
            "reducedness transfer across a fiber product",
            "If the fiber product of alpha and beta is reduced then both\n"
            "Nilp(A) meet Ker(alpha) and Nilp(B) meet Ker(beta) are trivial;\n"
            "conversely A reduced with the beta-side intersection trivial\n"
            "forces the fiber product reduced, and symmetrically. All three\n"
            "implications are evaluated on the instance.",
            lambda vals, inst: pullback_reduced_check(vals[0], vals[1], inst),
        ),
        _spec(
            "kernel_identity", (HOM, HOM),
            "kernel of the left projection is {0} x Ker(beta)",
            "In the fiber product of alpha and beta, an element (a, b) maps\n"
            "to zero under the left projection exactly when a = 0 and\n"
            "beta(b) = 0. The two membership masks are compared element by\n"
            "element.",
            lambda vals, inst: kernel_identity_check(vals[0], vals[1], inst),
        ),
        _spec(
            "dorroh", (IDEAL,),
            "identity adjunction to an ideal viewed as a rng",
            "Take the ideal as a rng R of characteristic n and form the ring\n"
            "on (Z/nZ) x R with product (a,x)(a',x') = (aa', ax' + a'x + xx').\n"
            "The result is unital with identity (1,0), has characteristic n,\n"
            "contains R as an ideal with quotient Z/nZ (witnessed by an\n"
            "explicit iso), and is covered by multiples of the identity\n"
            "plus R.",
            _run_dorroh,
        ),
        _spec(
            "nagata_as_amalgam", (HOM, IDEAL),
            "a square-zero extension equals its own amalgam",
            "Make the ideal J a module over A through f, build the\n"
            "square-zero extension B = A x J with (a,x)(a',x') =\n"
            "(aa', a.x' + a'.x), and amalgamate the base embedding along the\n"
            "embedded module. The collapse (a, iota(a)+j) -> iota(a)+j is a\n"
            "bijective hom onto B.",
            _run_nagata,
        ),
        _spec(
            "d_plus_m", (SUBRING, IDEAL),
            "coefficient subring plus an intersection of maximal ideals",
            "For maximal ideals M_i of T each meeting the unital subring D\n"
            "only in 0, set J to their intersection. D + J is a subring of T\n"
            "of order |D| * |J|, and the second projection of the amalgam of\n"
            "the inclusion D -> T along J is a bijective hom onto it.",
            _run_d_plus_m, variadic=True,
        ),
        _spec(
            "cpi_prime", (RING, IDEAL),
            "preimage ring of a prime's residue embedding",
            "Localize A at the complement of a prime P, extend P, and map\n"
            "onto the residue field. The preimage of the canonical copy of\n"
            "A/P equals lambda(A) + P-extension as a set, and the amalgam of\n"
            "lambda along the extension, modulo the kernel of its second\n"
            "projection, is isomorphic to it by an explicit witness.",
            _run_cpi_prime,
        ),
        _spec(
            "cpi_ideal", (RING, IDEAL),
            "preimage ring of an arbitrary proper ideal",
            "Localize A at the elements regular modulo I, reduce fractions\n"
            "into the total quotient ring of A/I, and pull back the canonical\n"
            "copy of A/I. The preimage equals lambda(A) + extension of I, and\n"
            "the amalgam-quotient witness validates as for the prime case.",
            _run_cpi_ideal,
        ),
        _spec(
            "trunc_poly_amalgam", (SUBRING, IDEAL, INT, INT),
            "constrained truncated polynomials form an amalgam",
            "Inside truncated polynomials over B, the elements with constant\n"
            "term in the subring A and all other coefficients in the ideal J\n"
            "form a subring of order |A| * |J|^(nonconstant monomials). It\n"
            "equals the amalgam of the constant embedding of A along the\n"
            "ideal of zero-constant-term polynomials with coefficients in J.",
            _run_trunc_poly_amalgam,
        ),
        _spec(
            "noetherian", (AMALGAM,),
            "finiteness evidence for an amalgam's chain conditions",
            "On finite instances every chain condition holds; the check\n"
            "computes the supporting data: a minimum generating set for J as\n"
            "a module over the base through f, finiteness of the base, of\n"
            "f(A)+J, and of the induced residue map.",
            lambda vals, inst: noetherian_report(vals[0], inst),
        ),
        _spec(
            "noetherian_xjx", (SUBRING, IDEAL),
            "theorem-backed verdicts for polynomial extensions",
            "For a unital subring A of B and an ideal J of B, the ring of\n"
            "polynomials with constant term in A and other coefficients in J\n"
            "is Noetherian exactly when J is idempotent (J*J = J), while the\n"
            "unconstrained version with coefficients in B is Noetherian\n"
            "whenever the data are finite (the extension is module-finite).\n"
            "The infinite rings are never constructed; the report evaluates\n"
            "J*J against J and the finite hypotheses, and carries status\n"
            "theorem_backed.",
            _run_noetherian_xjx,
        ),
        _spec(
            "reduced_converse_search", (AMALGAM,),
            "search for a reduced amalgam over a non-reduced f(A)+J",
            "Scans the given amalgams for one whose base is reduced and whose\n"
            "ideal meets the target's nilradical trivially while f(A)+J is\n"
            "not reduced. Reports the witness or its absence; absence is a\n"
            "statement about the scanned instances only.",
            lambda vals, inst: reduced_converse_search(list(vals), inst),
            variadic=True,
        ),
    ]
}


def evaluate(script: Script) -> list[VerificationReport]:
    """One report per check statement, in order. Precondition failures
    surface as hypothesis_not_met reports; non-library failures are wrapped
    with the check's source location and raised."""
    ev = Evaluator(script.definitions)
    reports: list[VerificationReport] = []
    for chk in script.checks:
        spec = REGISTRY[chk.name]
        instance = ", ".join(a.render() for a in chk.args)
        start = time.perf_counter()
        try:
            vals = [ev.value(a) for a in chk.args]
            rep = spec.runner(vals, instance)
        except FinringError as exc:
            rep = VerificationReport(chk.name, instance, HYPOTHESIS_NOT_MET)
            rep.add("note", str(exc))
        except Exception as exc:
            raise EvaluationError(f"{chk.name}: {exc}", chk.line, chk.col) from exc
        rep.millis = (time.perf_counter() - start) * 1000.0
        reports.append(rep)
    return reports


# -- catalog generation ---------------------------------------------------------------


_MIN_BUDGET = 4


def _catalog_rings(budget: int) -> list[tuple[str, str, FiniteRng]]:
    """(name, expression text, built ring) for the deterministic roster."""
    entries = [(f"R{n}", f"zmod({n})", zmod(n)) for n in range(2, 13)]
    entries += [
        ("F4", "gf(4)", galois_field(4)),
        ("P22", "product(zmod(2), zmod(2))", direct_product([zmod(2), zmod(2)])),
        ("P23", "product(zmod(2), zmod(3))", direct_product([zmod(2), zmod(3)])),
        ("P24", "product(zmod(2), zmod(4))", direct_product([zmod(2), zmod(4)])),
        ("P33", "product(zmod(3), zmod(3))", direct_product([zmod(3), zmod(3)])),
        ("T21", "trunc_poly(zmod(2), 1, 1)", trunc_poly(zmod(2), 1, 1)),
        ("T22", "trunc_poly(zmod(2), 1, 2)", trunc_poly(zmod(2), 1, 2)),
        ("V221", "trunc_poly(zmod(2), 2, 1)", trunc_poly(zmod(2), 2, 1)),
        ("T31", "trunc_poly(zmod(3), 1, 1)", trunc_poly(zmod(3), 1, 1)),
        ("T41", "trunc_poly(zmod(4), 1, 1)", trunc_poly(zmod(4), 1, 1)),
        ("TF4", "trunc_poly(gf(4), 1, 1)", trunc_poly(galois_field(4), 1, 1)),
        ("T25", "trunc_poly(zmod(2), 1, 5)", trunc_poly(zmod(2), 1, 5)),
    ]
    return [e for e in entries if e[2].order <= budget]


def _gen_text(ring_name: str, ring: FiniteRng, ideal) -> str:
    members = [ring.labels[i] for i in ideal.indices if i != ring.zero]
    if not members:
        members = [ring.labels[ring.zero]]
    return f"gen({ring_name}; " + ", ".join(
        _label_token(lab) for lab in members
    ) + ")"


def generate_catalog(seed: int, budget: int) -> str:
    """Deterministic script text exercising every check. The seed picks which
    instances survive the per-section caps; the budget bounds every
    constructed ring order. Identical arguments give identical text."""
    header = [
        "# catalog of verification instances",
        f"# seed {seed}, budget {budget}",
    ]
    if budget < _MIN_BUDGET:
        return "\n".join(header + [
            f"# warning: budget {budget} is below the smallest instance "
            f"(order {_MIN_BUDGET}); catalog is empty",
        ]) + "\n"
    rng = random.Random(seed)
    rings = _catalog_rings(budget)
    by_name = {name: ring for name, _, ring in rings}
    lines = list(header) + [""]
    for name, text, _ in rings:
        lines.append(f"ring {name} = {text};")
    lines.append("")

    ideal_names: dict[tuple[str, bytes], str] = {}
    ideals_of: dict[str, list] = {}
    for name, _, ring in rings:
        ideals = all_ideals(ring, cap=32)
        ideals_of[name] = ideals
        for k, ideal in enumerate(ideals):
            iname = f"I_{name}_{k}"
            ideal_names[(name, ideal.members.tobytes())] = iname
            lines.append(f"ideal {iname} = {_gen_text(name, ring, ideal)};")
    lines.append("")

    hom_sources = [e for e in rings if e[2].order <= 12]
    hom_names: list[tuple[str, str, str, RingHom]] = []
    for a_name, _, A in hom_sources:
        for b_name, _, B in hom_sources:
            for k, h in enumerate(enumerate_homs(A, B, unital=True, cap=8)):
                hname = f"h_{a_name}_{b_name}_{k}"
                images = ", ".join(str(int(x)) for x in h.map)
                lines.append(
                    f"hom {hname} = map({a_name} -> {b_name}; {images});"
                )
                hom_names.append((hname, a_name, b_name, h))
    lines.append("")

    def ideal_name(ring_name: str, ideal) -> str:
        return ideal_names[(ring_name, ideal.members.tobytes())]

    def find_ideal(ring_name: str, gens) -> str:
        ring = by_name[ring_name]
        idx = [g if isinstance(g, int) else ring.index_of(g) for g in gens]
        target = ideal_from_generators(ring, idx)
        return ideal_name(ring_name, target)

    # amalgam instances: (hom or duplication) x ideal of the codomain
    amalgam_exprs: list[str] = []
    for hname, a_name, b_name, h in hom_names:
        for ideal in ideals_of[b_name]:
            if h.domain.order * ideal.size > budget:
                continue
            amalgam_exprs.append(f"amalg({hname}, {ideal_name(b_name, ideal)})")
    for name, _, ring in rings:
        if ring.order > 12:
            continue
        for ideal in ideals_of[name]:
            if ring.order * ideal.size > budget:
                continue
            amalgam_exprs.append(f"dup({name}, {ideal_name(name, ideal)})")
    amalgam_exprs = sorted(set(amalgam_exprs))
    designated = [
        f"dup(R4, {find_ideal('R4', [2])})",
        f"dup(R6, {find_ideal('R6', [2])})",
        f"dup(R6, {find_ideal('R6', [3])})",
        f"dup(R12, {find_ideal('R12', [4])})",
        f"amalg(h_R4_R2_0, {ideal_name('R2', ideals_of['R2'][-1])})",
    ]
    cap = 36
    pool = [e for e in amalgam_exprs if e not in designated]
    keep = designated + (
        sorted(rng.sample(pool, cap - len(designated)))
        if len(pool) > cap - len(designated) else pool
    )

    lines.append("# per-instance verification")
    for expr in keep:
        for check in ("cardinality", "pull_identity", "canonical_isos",
                      "reduced_criterion", "domain_criterion",
                      "retraction_roundtrip"):
            lines.append(f"check {check}({expr});")
    lines.append("")
    lines.append("# heavier presentations on a slice")
    for expr in keep[:10]:
        lines.append(f"check alt_pullbacks({expr});")
        lines.append(f"check dotted_presentation({expr});")
        lines.append(f"check noetherian({expr});")
    lines.append("")

    lines.append("# iterated amalgams")
    iter_rings = [(f"R{n}") for n in (2, 3, 4, 5, 6) if f"R{n}" in by_name]
    emitted = 0
    for n_fold in (2, 3):
        count = 0
        for rname in iter_rings:
            ring = by_name[rname]
            for ideal in ideals_of[rname]:
                if ideal.size < 2:
                    continue
                if ring.order * ideal.size ** n_fold > budget:
                    continue
                lines.append(
                    f"check iterated_iso(id({rname}), "
                    f"{ideal_name(rname, ideal)}, {n_fold});"
                )
                count += 1
                emitted += 1
                if count >= 6:
                    break
            if count >= 6:
                break
    lines.append("")

    lines.append("# pullback criteria")
    lines.append("check retraction_criterion(h_R2_R2_0, h_R4_R2_0);")
    pair_pool = []
    for hname1, a1, b1, _ in hom_names:
        for hname2, a2, b2, _ in hom_names:
            if b1 == b2 and hname1 <= hname2:
                pair_pool.append((hname1, hname2))
    pair_pool = sorted(set(pair_pool))
    pairs = rng.sample(pair_pool, min(8, len(pair_pool)))
    for h1, h2 in sorted(pairs):
        lines.append(f"check kernel_identity({h1}, {h2});")
        lines.append(f"check pullback_reduced({h1}, {h2});")
    lines.append("check pullback_presentation(h_R4_R2_0, h_R2_R2_0, h_R4_R2_0);")
    lines.append("check pullback_presentation(h_P22_R2_0, h_R2_R2_0, h_P22_R2_1);")
    lines.append("")

    lines.append("# hom pairs sharing an amalgam")
    lines.append("hom d_P22 = map(P22 -> P22; 0, 3, 0, 3);")
    lines.append(
        f"check same_amalgam(id(P22), d_P22, {find_ideal('P22', ['(1,0)'])});"
    )
    lines.append("hom s_P22 = map(P22 -> P22; 0, 2, 1, 3);")
    lines.append(
        f"check same_amalgam(id(P22), s_P22, {find_ideal('P22', ['(1,0)'])});"
    )
    lines.append(
        f"check same_amalgam(id(R4), id(R4), {ideal_name('R4', ideals_of['R4'][-1])});"
    )
    lines.append("")

    lines.append("# named constructions")
    lines.append(f"check dorroh({find_ideal('R4', [2])});")
    lines.append(f"check dorroh({find_ideal('R9', [3])});")
    lines.append(f"check dorroh({find_ideal('R6', [2])});")
    lines.append(
        f"check nagata_as_amalgam(id(R2), {ideal_name('R2', ideals_of['R2'][-1])});"
    )
    lines.append(
        f"check nagata_as_amalgam(h_R4_R2_0, {ideal_name('R2', ideals_of['R2'][-1])});"
    )
    lines.append(
        f"check nagata_as_amalgam(id(R3), {ideal_name('R3', ideals_of['R3'][-1])});"
    )
    if "TF4" in by_name:
        lines.append(f"check d_plus_m(sub(TF4), {find_ideal('TF4', ['X'])});")
    lines.append(f"check d_plus_m(sub(T21), {find_ideal('T21', ['X'])});")
    lines.append(f"check cpi_prime(R12, {find_ideal('R12', [2])});")
    lines.append(f"check cpi_prime(R12, {find_ideal('R12', [3])});")
    lines.append(f"check cpi_prime(R6, {find_ideal('R6', [3])});")
    lines.append(f"check cpi_ideal(R12, {find_ideal('R12', [4])});")
    lines.append(f"check cpi_ideal(R12, {find_ideal('R12', [2])});")
    lines.append(f"check cpi_ideal(R8, {find_ideal('R8', [2])});")
    lines.append(
        f"check trunc_poly_amalgam(sub(F4), "
        f"{ideal_name('F4', ideals_of['F4'][-1])}, 1, 1);"
    )
    lines.append(
        f"check trunc_poly_amalgam(sub(R4), {find_ideal('R4', [2])}, 1, 1);"
    )
    lines.append("")

    lines.append("# polynomial-extension verdicts")
    lines.append(
        f"check noetherian_xjx(sub(P22), {find_ideal('P22', ['(1,0)'])});"
    )
    lines.append(f"check noetherian_xjx(sub(R4), {find_ideal('R4', [2])});")
    lines.append(
        f"check noetherian_xjx(sub(R4), {ideal_name('R4', ideals_of['R4'][-1])});"
    )
    lines.append("")

    lines.append("# converse search over the kept instances")
    lines.append(
        "check reduced_converse_search(" + ", ".join(keep[:12]) + ");"
    )
    return "\n".join(lines) + "\n"


# -- CLI ------------------------------------------------------------------------------


def _print_table(reports: list[VerificationReport]) -> None:
    for rep in reports:
        print(rep.line())
    total = len(reports)
    failed = sum(1 for r in reports if r.status == FAIL)
    skipped = sum(1 for r in reports if r.status == HYPOTHESIS_NOT_MET)
    print(f"{total} checks: {total - failed - skipped} conclusive, "
          f"{skipped} hypothesis_not_met, {failed} failed")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="finring",
        description="verification scripts over finite commutative rings",
    )
    sub = parser.add_subparsers(dest="command")

    p_check = sub.add_parser("check", help="run a script's checks")
    p_check.add_argument("file")
    p_check.add_argument("--json", metavar="OUT", default=None,
                         help="also write the JSON report here")
    p_check.add_argument("--guard", type=int, default=None, metavar="N",
                         help="size guard for constructed rings")
    p_check.add_argument("--seed", type=int, default=0, metavar="S",
                         help="seed for randomized searches (current "
                              "strategies are deterministic)")

    p_cat = sub.add_parser("catalog", help="emit a deterministic instance script")
    p_cat.add_argument("--seed", type=int, default=0, metavar="S")
    p_cat.add_argument("--budget", type=int, default=256, metavar="N",
                       help="largest constructed ring order")
    p_cat.add_argument("--out", metavar="FILE", default=None,
                       help="write here instead of standard output")

    p_explain = sub.add_parser("explain", help="describe a check")
    p_explain.add_argument("name", nargs="?", default=None)

    args = parser.parse_args(argv)
    if args.command == "check":
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        try:
            script = parse(text)
        except (ScriptSyntaxError, UnknownName, TypeMismatch) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        guard = args.guard if args.guard is not None else config.size_guard()
        with config.guard_limit(guard):
            reports = evaluate(script)
        _print_table(reports)
        if args.json:
            try:
                with open(args.json, "w", encoding="utf-8") as fh:
                    fh.write(reports_to_json(reports))
            except OSError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
        return 1 if any(r.status == FAIL for r in reports) else 0

    if args.command == "catalog":
        text = generate_catalog(args.seed, args.budget)
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            except OSError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
        else:
            sys.stdout.write(text)
        return 0

    if args.command == "explain":
        if args.name is None:
            for spec in REGISTRY.values():
                print(f"{spec.name:28s} {spec.summary}")
            return 0
        spec = REGISTRY.get(args.name)
        if spec is None:
            print(f"error: unknown check {args.name!r}; available: "
                  + ", ".join(REGISTRY), file=sys.stderr)
            return 2
        print(f"{spec.name}({spec.signature()})")
        print()
        print(spec.statement)
        return 0

    parser.print_help()
    return 2


if __name__ == "__main__":
    sys.exit(main())
