"""A small expression language for morphisms of the graded category.

Grammar (whitespace-separated tokens; `o` binds looser than `x`):

    term  :=  tens ( "o" tens )*
    tens  :=  atom ( "x" atom )*
    atom  :=  "(" term ")" | "id" "(" obj ")"
            | "braid" "(" obj "," obj ")" | "braid_inv" "(" obj "," obj ")"
            | IDENT
    obj   :=  oatom ( "x" oatom )*
    oatom :=  IDENT | "(" obj ")"

Identifiers may be dotted (H.m, M.act_l); declaring a structure binds its
maps under that namespace and as bare aliases when unambiguous.  `braid(X,Y)`
is the braiding X(x)Y -> Y(x)X and `braid_inv(X,Y)` its inverse.  Evaluation
is compositional and lands on exact GradedMaps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .checks import Report
from .errors import DslError
from .graded import GradedMap, compose, tensor

GRAMMAR_VERSION = "1"

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_.]*|[(),]|\S)")
KEYWORDS = {"o", "x", "id", "braid", "braid_inv"}


@dataclass(frozen=True)
class Tok:
    text: str
    pos: int


def tokenize(src: str):
    out = []
    i = 0
    while i < len(src):
        m = _TOKEN.match(src, i)
        if not m:
            break
        tok = m.group(1)
        if tok not in "()," and not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_.]*|1", tok):
            if tok == "1":
                pass
            else:
                raise DslError(f"unexpected character {tok!r}", pos=m.start(1))
        out.append(Tok(tok, m.start(1)))
        i = m.end()
    return out


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Id:
    obj: object


@dataclass(frozen=True)
class Braid:
    left: object
    right: object
    inverse: bool


@dataclass(frozen=True)
class Compose:
    parts: tuple


@dataclass(frozen=True)
class Tensor:
    parts: tuple


@dataclass(frozen=True)
class ObjName:
    name: str


@dataclass(frozen=True)
class ObjTensor:
    parts: tuple


class _Parser:
    def __init__(self, toks, src):
        self.toks = toks
        self.src = src
        self.k = 0

    def peek(self):
        return self.toks[self.k].text if self.k < len(self.toks) else None

    def next(self):
        if self.k >= len(self.toks):
            raise DslError("unexpected end of input", pos=len(self.src))
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, text):
        t = self.next()
        if t.text != text:
            raise DslError(f"expected {text!r}, found {t.text!r}", pos=t.pos)
        return t

    def term(self):
        parts = [self.tens()]
        while self.peek() == "o":
            self.next()
            parts.append(self.tens())
        return parts[0] if len(parts) == 1 else Compose(tuple(parts))

    def tens(self):
        parts = [self.atom()]
        while self.peek() == "x":
            self.next()
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else Tensor(tuple(parts))

    def atom(self):
        t = self.next()
        if t.text == "(":
            inner = self.term()
            self.expect(")")
            return inner
        if t.text == "id":
            self.expect("(")
            obj = self.obj()
            self.expect(")")
            return Id(obj)
        if t.text in ("braid", "braid_inv"):
            self.expect("(")
            a = self.obj()
            self.expect(",")
            b = self.obj()
            self.expect(")")
            return Braid(a, b, t.text == "braid_inv")
        if t.text in ("o", ")", ",", "x"):
            raise DslError(f"unexpected {t.text!r}", pos=t.pos)
        return Gen(t.text)

    def obj(self):
        parts = [self.oatom()]
        while self.peek() == "x":
            self.next()
            parts.append(self.oatom())
        return parts[0] if len(parts) == 1 else ObjTensor(tuple(parts))

    def oatom(self):
        t = self.next()
        if t.text == "(":
            inner = self.obj()
            self.expect(")")
            return inner
        if t.text in ("o", ")", ",", "x", "id", "braid", "braid_inv"):
            raise DslError(f"unexpected {t.text!r} in object expression", pos=t.pos)
        return ObjName(t.text)


def parse(src: str):
    toks = tokenize(src)
    if not toks:
        raise DslError("empty expression", pos=0)
    p = _Parser(toks, src)
    ast = p.term()
    if p.k != len(toks):
        raise DslError(f"trailing input starting at {toks[p.k].text!r}", pos=toks[p.k].pos)
    return ast


def print_term(t) -> str:
    if isinstance(t, Gen):
        return t.name
    if isinstance(t, Id):
        return f"id({print_obj(t.obj)})"
    if isinstance(t, Braid):
        head = "braid_inv" if t.inverse else "braid"
        return f"{head}({print_obj(t.left)}, {print_obj(t.right)})"
    if isinstance(t, Compose):
        return " o ".join(_wrap(p, tensor_ok=True) for p in t.parts)
    if isinstance(t, Tensor):
        return " x ".join(_wrap(p, tensor_ok=False) for p in t.parts)
    raise DslError(f"not a term: {t!r}")


def _wrap(t, tensor_ok):
    s = print_term(t)
    if isinstance(t, Compose) or (isinstance(t, Tensor) and not tensor_ok):
        return f"({s})"
    return s


def print_obj(o) -> str:
    if isinstance(o, ObjName):
        return o.name
    if isinstance(o, ObjTensor):
        return " x ".join(
            f"({print_obj(p)})" if isinstance(p, ObjTensor) else print_obj(p)
            for p in o.parts
        )
    raise DslError(f"not an object expression: {o!r}")


# -- environments ---------------------------------------------------------------


class Environment:
    """Named spaces and maps over one braided context."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.spaces = {"1": ctx.unit}
        self.maps = {}
        self._ambiguous = set()

    def bind_space(self, name, space):
        if name in self.spaces and self.spaces[name] != space:
            raise DslError(f"object name {name!r} already bound")
        self.spaces[name] = space

    def bind_map(self, name, mp, alias=None):
        self.maps[name] = mp
        if alias:
            if alias in self.maps and self.maps[alias] != mp:
                self._ambiguous.add(alias)
                del self.maps[alias]
            elif alias not in self._ambiguous:
                self.maps[alias] = mp

    def bind_structure(self, name, h):
        self.bind_space(name, h.carrier)
        for attr, alias in (("m", "m"), ("eta", "eta"), ("delta", "delta"),
                            ("eps", "eps"), ("s", "S")):
            mp = getattr(h, attr)
            if mp is not None:
                self.bind_map(f"{name}.{alias}", mp, alias=alias)

    def bind_module(self, name, carrier, actions):
        """actions: mapping from generator suffix (act_l, coact_r, ...) to maps."""
        self.bind_space(name, carrier)
        for suffix, mp in actions.items():
            if mp is not None:
                self.bind_map(f"{name}.{suffix}", mp, alias=suffix)

    def lookup_map(self, name, pos=None):
        if name in self.maps:
            return self.maps[name]
        if name in self._ambiguous:
            raise DslError(
                f"{name!r} is ambiguous here; qualify it with a structure name", pos=pos
            )
        raise DslError(f"unknown morphism {name!r}", pos=pos)

    def lookup_space(self, name, pos=None):
        if name not in self.spaces:
            raise DslError(f"unknown object {name!r}", pos=pos)
        return self.spaces[name]


def eval_obj(o, env: Environment):
    if isinstance(o, ObjName):
        return env.lookup_space(o.name)
    if isinstance(o, ObjTensor):
        out = eval_obj(o.parts[0], env)
        for p in o.parts[1:]:
            out = out.tensor(eval_obj(p, env))
        return out
    raise DslError(f"not an object expression: {o!r}")


def _describe(space):
    degs = {}
    for d in space.degrees:
        degs[d] = degs.get(d, 0) + 1
    parts = ", ".join(f"{v} of degree {k}" for k, v in degs.items())
    return f"dim {space.dim} ({parts})" if space.dim else "dim 0"


def evaluate(t, env: Environment) -> GradedMap:
    if isinstance(t, Gen):
        return env.lookup_map(t.name)
    if isinstance(t, Id):
        return env.ctx.ident(eval_obj(t.obj, env))
    if isinstance(t, Braid):
        X = eval_obj(t.left, env)
        Y = eval_obj(t.right, env)
        return env.ctx.braiding(X, Y, inverse=t.inverse)
    if isinstance(t, Tensor):
        return tensor(*[evaluate(p, env) for p in t.parts])
    if isinstance(t, Compose):
        maps = [evaluate(p, env) for p in t.parts]
        out = maps[-1]
        for part, g in zip(reversed(t.parts[:-1]), reversed(maps[:-1])):
            if out.codomain != g.domain:
                raise DslError(
                    f"cannot compose {print_term(part)!r} "
                    f"(domain {_describe(g.domain)}) with a map producing "
                    f"{_describe(out.codomain)}"
                )
            out = compose(g, out)
        return out
    raise DslError(f"not a term: {t!r}")


def assert_equal(lhs_src: str, rhs_src: str, env: Environment) -> Report:
    """Parse, evaluate and compare two morphism expressions; on failure the
    report carries the residual and its first differing basis entry."""
    rep = Report("expression equality")
    lhs = evaluate(parse(lhs_src), env)
    rhs = evaluate(parse(rhs_src), env)
    if lhs.domain != rhs.domain or lhs.codomain != rhs.codomain:
        return rep.add(
            "shapes_agree", False,
            note=f"{_describe(lhs.domain)} -> {_describe(lhs.codomain)} vs "
                 f"{_describe(rhs.domain)} -> {_describe(rhs.codomain)}",
        )
    diff = lhs - rhs
    if diff.is_zero:
        return rep.add("equal", True)
    lead = diff.leading_entry()
    return rep.add(
        "equal", False, residual=diff,
        note=f"first differing entry at ({lead[0]}, {lead[1]}): "
             f"difference {lead[2]}",
    )
