"""Parsers for the ring-spec mini-language and the value-expression grammar.

Ring specs::

    ring    := atom ("[" name ("," name)* "]")*
    atom    := "Z" | "Z/" int | "Loc(" ring "," value ")" | "B(" ring "," value ["," name] ")"
             | "(" ring ")"

Values (evaluated inside a given ring)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" int)?
    atom    := int | name | "(" expr ")"

Division is exact division; it fails loudly when the quotient does not exist.
"""
from __future__ import annotations

import re
from functools import lru_cache

from .base import DivisibilityFailure, IntegerRing, IntModRing, Ring, RingError, RingValue
from .localized import LocalizedRing
from .mixed import MixedBRing
from .poly import PolyRing


class RingSpecError(RingError):
    pass


class ValueParseError(RingError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - regex always matches a char
            raise ValueParseError(f"bad input at {pos}: {text!r}")
        num, name, ch = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("name", name))
        elif ch.strip():
            out.append(("op", ch))
        pos = m.end()
    return out


class _ValueParser:
    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.gens = ring.gens()

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val is not None and tok[1] != val):
            raise ValueParseError(f"unexpected {tok[1]!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.i != len(self.toks):
            raise ValueParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return v

    def expr(self):
        R = self.ring
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = R.add(v, w) if op == "+" else R.sub(v, w)
        return v

    def term(self):
        R = self.ring
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            if op == "*":
                v = R.mul(v, w)
            else:
                q = R.divide_exact(v, w)
                if q is None:
                    raise ValueParseError(
                        f"{R.format(v)} is not divisible by {R.format(w)} in {R.spec}"
                    )
                v = q
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return self.ring.neg(self.unary())
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            e = self.take("int")[1]
            try:
                v = self.ring.pow(v, -e if neg else e)
            except DivisibilityFailure as exc:
                raise ValueParseError(str(exc)) from None
        return v

    def atom(self):
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return self.ring.from_int(val)
        if kind == "name":
            self.take()
            if val not in self.gens:
                raise ValueParseError(f"unknown variable {val!r} for ring {self.ring.spec}")
            return self.gens[val]
        if (kind, val) == ("op", "("):
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        raise ValueParseError(f"unexpected {val!r} in {self.text!r}")


def parse_value(ring: Ring, text) -> RingValue:
    if isinstance(text, int):
        return RingValue(ring, ring.from_int(text))
    return RingValue(ring, _ValueParser(ring, str(text)).parse())


def _split_args(text: str, start: int):
    """Split the comma separated arguments of a call starting after '('."""
    depth = 0
    args = []
    cur = start
    i = start
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            if depth == 0:
                args.append(text[cur:i])
                return args, i + 1
            depth -= 1
        elif ch == "," and depth == 0:
            args.append(text[cur:i])
            cur = i + 1
        i += 1
    raise RingSpecError(f"unbalanced parentheses in {text!r}")


def _parse_ring(text: str) -> Ring:
    s = text.strip()
    if not s:
        raise RingSpecError("empty ring spec")
    # strip postfix polynomial brackets from the right
    if s.endswith("]"):
        depth = 0
        for i in range(len(s) - 1, -1, -1):
            if s[i] == "]":
                depth += 1
            elif s[i] == "[":
                depth -= 1
                if depth == 0:
                    break
        else:
            raise RingSpecError(f"unbalanced brackets in {text!r}")
        base = _parse_ring(s[:i])
        names = [v.strip() for v in s[i + 1 : -1].split(",")]
        if not all(re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v) for v in names):
            raise RingSpecError(f"bad variable list in {text!r}")
        try:
            return PolyRing(base, names)
        except ValueError as exc:
            raise RingSpecError(str(exc)) from None
    if s == "Z":
        return IntegerRing()
    m = re.fullmatch(r"Z\s*/\s*(\d+)", s)
    if m:
        try:
            return IntModRing(int(m.group(1)))
        except RingError as exc:
            raise RingSpecError(str(exc)) from None
    if s.startswith("(") and s.endswith(")"):
        return _parse_ring(s[1:-1])
    m = re.match(r"(Loc|B)\s*\(", s)
    if m:
        args, end = _split_args(s, m.end())
        if end != len(s):
            raise RingSpecError(f"trailing text in {text!r}")
        base = _parse_ring(args[0])
        if m.group(1) == "Loc":
            if len(args) != 2:
                raise RingSpecError("Loc(R, a) takes two arguments")
            a = parse_value(base, args[1]).payload
            return LocalizedRing(base, a)
        if len(args) not in (2, 3):
            raise RingSpecError("B(R, a[, var]) takes two or three arguments")
        a = parse_value(base, args[1]).payload
        var = args[2].strip() if len(args) == 3 else "t"
        return MixedBRing(base, a, var)
    raise RingSpecError(f"cannot parse ring spec {text!r}")


@lru_cache(maxsize=None)
def parse_ring(text: str) -> Ring:
    """Parse a ring spec such as "Z", "Z/5[t]", "Loc(Z,2)" or "B(Z[x],2)"."""
    try:
        return _parse_ring(text)
    except ValueParseError as exc:
        raise RingSpecError(str(exc)) from None
