"""Element expressions for the command line.

Grammar (whitespace ignored)::

    expr    := term (('+' | '-') term)*
    term    := ['-'] factor ('*' factor)*
    factor  := number | atom ['><' atom] | '(' expr ')'
    atom    := 'a' ['^' int] | 'b' | 'w[' int ',' int ']' | 'd[' label ']' | 'u[' label ']' | '1'
    number  := digits ['/' digits]

``x><y`` builds a double basis element from an X literal (or 1) and a Y literal;
it binds tighter than ``*``, so ``w[0,1]><a^2*b`` reads as (w[0,1]><a^2)(1><b),
which is the same element as w[0,1] >< a^2 b.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Elem, scalar


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} (at position {pos})")


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<pair>><)|(?P<br>[dwu]\[[^\]]*\])|(?P<op>[-+*()^])|(?P<id>[ab]))")


@dataclass
class Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Tok]:
    out, i = [], 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise ParseError(f"unexpected character {text[i]!r}", i, text)
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Tok(kind, m.group(kind), start))
        i = m.end()
    out.append(Tok("end", "", len(text)))
    return out


# AST nodes are tuples: ("num", Fraction, pos), ("atom", kind, args, pos),
# ("pair", left_atom_or_None, right_atom, pos), ("mul", [nodes]), ("add", [(sign, node)]), ("neg", node)

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Tok:
        return self.toks[self.i]

    def take(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str) -> Tok:
        t = self.take()
        if t.kind != "op" or t.text != op:
            raise ParseError(f"expected {op!r}", t.pos, self.text)
        return t

    def parse(self):
        if not self.text.strip():
            raise ParseError("empty expression", 0, self.text)
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected {t.text!r}", t.pos, self.text)
        return node

    def expr(self):
        terms = [(1, self.term())]
        while self.peek().kind == "op" and self.peek().text in "+-":
            s = 1 if self.take().text == "+" else -1
            terms.append((s, self.term()))
        return terms[0][1] if len(terms) == 1 and terms[0][0] == 1 else ("add", terms)

    def term(self):
        neg = False
        if self.peek().kind == "op" and self.peek().text == "-":
            self.take()
            neg = True
        factors = [self.factor()]
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            factors.append(self.factor())
        node = factors[0] if len(factors) == 1 else ("mul", factors)
        return ("neg", node) if neg else node

    def factor(self):
        t = self.peek()
        if t.kind == "op" and t.text == "(":
            self.take()
            node = self.expr()
            self.expect_op(")")
            return node
        if t.kind == "num":
            self.take()
            if t.text == "1" and self.peek().kind == "pair":
                return self._pair(None, t.pos)
            return ("num", Fraction(t.text), t.pos)
        atom = self.atom()
        if self.peek().kind == "pair":
            return self._pair(atom, t.pos)
        return atom

    def _pair(self, left, pos):
        self.take()
        t = self.peek()
        if t.kind == "num" and t.text == "1":
            self.take()
            right = ("atom", "one", (), t.pos)
        else:
            right = self.atom()
        return ("pair", left, right, pos)

    def _int(self, s: str, pos: int) -> int:
        try:
            return int(s.strip())
        except ValueError:
            raise ParseError(f"malformed integer {s.strip()!r}", pos, self.text) from None

    def atom(self):
        t = self.take()
        if t.kind == "id" and t.text == "a":
            exp = 1
            if self.peek().kind == "op" and self.peek().text == "^":
                self.take()
                neg = False
                if self.peek().kind == "op" and self.peek().text == "-":
                    self.take()
                    neg = True
                n = self.take()
                if n.kind != "num" or "/" in n.text:
                    raise ParseError("malformed exponent", n.pos, self.text)
                exp = -int(n.text) if neg else int(n.text)
            return ("atom", "a", (exp,), t.pos)
        if t.kind == "id" and t.text == "b":
            return ("atom", "b", (), t.pos)
        if t.kind == "br":
            head, body = t.text[0], t.text[2:-1]
            if head == "w":
                parts = body.split(",")
                if len(parts) != 2:
                    raise ParseError("w[m,n] needs two indices", t.pos, self.text)
                m, n = self._int(parts[0], t.pos), self._int(parts[1], t.pos)
                if n not in (0, 1):
                    raise ParseError("second index must be 0 or 1", t.pos, self.text)
                return ("atom", "w", (m, n), t.pos)
            label = body.strip()
            if not label:
                raise ParseError(f"{head}[...] needs a group element", t.pos, self.text)
            return ("atom", head, (label,), t.pos)
        raise ParseError(f"expected a basis literal, got {t.text or 'end of input'!r}", t.pos, self.text)


def parse(text: str):
    return _Parser(text).parse()


# -- evaluation -------------------------------------------------------------------------

class EvalContext:
    """Maps literals to elements of one instance."""

    def __init__(self, inst, atom, pair=None):
        self.inst = inst
        self._atom = atom
        self._pair = pair

    def atom(self, kind, args, pos, text):
        e = self._atom(kind, args)
        if e is None:
            raise ParseError(f"literal {kind!r} is not an element of {self.inst.name}", pos, text)
        return e

    def pair(self, left, right, pos, text):
        if self._pair is None:
            raise ParseError(f"'><' needs a double, not {self.inst.name}", pos, text)
        r = self._pair(left, right)
        if r is None:
            raise ParseError("'><' needs an element of the first factor (or 1) on the left and of the second on the right",
                             pos, text)
        return r


def _ore_atom(A):
    def atom(kind, args):
        if kind == "a":
            return A.elem((args[0], 0))
        if kind == "b":
            return A.elem((0, 1))
        if kind == "one":
            return A.one()
        return None
    return atom


def _dual_atom(Ah):
    return lambda kind, args: Ah.elem(args) if kind == "w" else None


def _group_atom(inst, kind_name):
    G = inst.group

    def atom(kind, args):
        if kind == "one" and inst.unital:
            return inst.one()
        if kind != kind_name:
            return None
        if args[0] not in G.elements:
            raise KeyError(args[0])
        return inst.elem(args[0])
    return atom


def context_for(inst) -> EvalContext:
    from .double import DoubleInstance
    from .instances.group import FunctionAlgebra, GroupAlgebra
    from .instances.ore import OreAlgebra, OreDual

    if isinstance(inst, OreAlgebra):
        return EvalContext(inst, _ore_atom(inst))
    if isinstance(inst, OreDual):
        return EvalContext(inst, _dual_atom(inst))
    if isinstance(inst, FunctionAlgebra):
        return EvalContext(inst, _group_atom(inst, "d"))
    if isinstance(inst, GroupAlgebra):
        return EvalContext(inst, _group_atom(inst, "u"))
    if isinstance(inst, DoubleInstance):
        cx, cy = context_for(inst.X), context_for(inst.Y)

        def side(ctx, kind, args):
            return ctx._atom(kind, args)

        def atom(kind, args):
            x = side(cx, kind, args)
            if x is not None and kind != "one":
                return inst.embed_x(x)
            y = side(cy, kind, args)
            if y is not None:
                return inst.embed_y(y) if kind != "one" or not inst.unital else inst.one()
            return None

        def pair(left, right):
            xe = None if left is None else side(cx, left[1], left[2])
            ye = side(cy, right[1], right[2])
            if (left is not None and xe is None) or ye is None:
                return None
            return inst.pair(xe, ye)

        return EvalContext(inst, atom, pair)
    raise TypeError(f"no expression syntax for {inst.name}")


def evaluate(node, ctx: EvalContext, text: str = ""):
    """Evaluate to an Elem (or an exact scalar if no basis literal occurs)."""
    inst = ctx.inst
    tag = node[0]
    if tag == "num":
        return scalar(node[1])
    if tag == "atom":
        try:
            return ctx.atom(node[1], node[2], node[3], text)
        except KeyError as exc:
            raise ParseError(f"unknown group element {exc.args[0]!r}", node[3], text) from None
    if tag == "pair":
        try:
            return ctx.pair(node[1], node[2], node[3], text)
        except KeyError as exc:
            raise ParseError(f"unknown group element {exc.args[0]!r}", node[3], text) from None
    if tag == "neg":
        v = evaluate(node[1], ctx, text)
        return -v
    if tag == "mul":
        acc = None
        for f in node[1]:
            v = evaluate(f, ctx, text)
            if acc is None:
                acc = v
            elif isinstance(acc, Elem) and isinstance(v, Elem):
                acc = inst.multiply(acc, v)
            elif isinstance(acc, Elem):
                acc = acc.scale(v)
            elif isinstance(v, Elem):
                acc = v.scale(acc)
            else:
                acc = scalar(acc * v)
        return acc
    if tag == "add":
        vals = [(s, evaluate(n, ctx, text)) for s, n in node[1]]
        if any(isinstance(v, Elem) for _, v in vals):
            total = inst.zero()
            for s, v in vals:
                if not isinstance(v, Elem):
                    v = _as_elem(inst, v, text)
                total = total + v.scale(s)
            return total
        return scalar(sum(s * v for s, v in vals))
    raise AssertionError(tag)


def _as_elem(inst, c, text):
    if not inst.unital:
        raise ParseError(f"a bare scalar is not an element of the non-unital {inst.name}", 0, text)
    return inst.one().scale(c)


def parse_element(text: str, inst) -> Elem:
    """Parse and evaluate to an element of ``inst``; bare scalars become multiples of 1."""
    v = evaluate(parse(text), context_for(inst), text)
    if not isinstance(v, Elem):
        v = _as_elem(inst, v, text)
    return v
