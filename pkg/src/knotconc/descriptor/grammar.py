"""Text form of descriptors.

    expr := atom | sum(expr, expr, ...) | mirror(expr) | cable(int, expr)
          | infect(expr, eta int, expr)
"""

from __future__ import annotations

import re
from typing import Mapping

from ..seifert import SeifertMatrix, lookup
from .nodes import Atom, Cable, Infection, KnotDescriptor, Mirror, Sum

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)(?![\w\-])|(?P<name>[A-Za-z0-9_][A-Za-z0-9_\-]*)|(?P<punct>[(),]))")


class DescriptorSyntaxError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DescriptorSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, matrices: Mapping[str, SeifertMatrix]):
        self.toks = _tokenize(text)
        self.i = 0
        self.matrices = matrices

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None, kind=None):
        k, v = self.peek()
        if k is None or (value is not None and v != value) or (kind is not None and k != kind):
            want = value or kind
            raise DescriptorSyntaxError(f"expected {want!r}, found {v!r}")
        self.i += 1
        return v

    def integer(self) -> int:
        k, v = self.peek()
        if k not in ("int",):
            raise DescriptorSyntaxError(f"expected an integer, found {v!r}")
        self.i += 1
        return int(v)

    def expr(self) -> KnotDescriptor:
        k, v = self.peek()
        if k == "int":  # names such as 3_1 start with a digit but are not plain integers
            raise DescriptorSyntaxError(f"expected a knot, found integer {v}")
        name = self.take(kind="name")
        if self.peek()[1] != "(":
            return Atom(self.resolve(name))
        self.take("(")
        if name == "sum":
            parts = [self.expr()]
            while self.peek()[1] == ",":
                self.take(",")
                parts.append(self.expr())
            node = Sum(tuple(parts))
        elif name == "mirror":
            node = Mirror(self.expr())
        elif name == "cable":
            r = self.integer()
            self.take(",")
            node = Cable(r, self.expr())
        elif name == "infect":
            carrier = self.expr()
            self.take(",")
            self.take("eta")
            depth = self.integer()
            self.take(",")
            node = Infection(carrier, depth, self.expr())
        else:
            raise DescriptorSyntaxError(f"unknown operation {name!r}")
        self.take(")")
        return node

    def resolve(self, name: str) -> SeifertMatrix:
        if name in self.matrices:
            return self.matrices[name]
        try:
            return lookup(name)
        except KeyError:
            raise DescriptorSyntaxError(f"unknown knot {name!r}") from None


def parse(text: str, matrices: Mapping[str, SeifertMatrix] | None = None) -> KnotDescriptor:
    """Parse a descriptor; atom names resolve first in ``matrices``, then in the catalog."""
    p = _Parser(text, matrices or {})
    node = p.expr()
    if p.peek()[0] is not None:
        raise DescriptorSyntaxError(f"trailing input {p.peek()[1]!r}")
    return node


def render(K: KnotDescriptor) -> str:
    return str(K)
