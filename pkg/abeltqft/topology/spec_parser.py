"""Parser for manifold specifications.

    spec  := "S3" | "S1xS2" | "Poincare"
           | "L(" int "," int ")"
           | "sum(" spec "," spec ")"
           | "-" spec                  (orientation reversal)
           | "@" path                  (matrix JSON file; inside sum() the path
                                        ends at the next "," or ")")
"""
from __future__ import annotations

import logging
import re

from abeltqft.errors import NotCoprime, ParseError
from abeltqft.topology.manifolds import CATALOG, Manifold, connected_sum, lens_space, load_matrix_file

logger = logging.getLogger(__name__)

_INT = re.compile(r"[+-]?\d+")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9]*")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.depth = 0  # sum() 嵌套层数

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _expect(self, token: str):
        self._skip()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos:self.pos + 1] or "end of input"
            raise ParseError(f"expected {token!r}, found {found!r}", position=self.pos)
        self.pos += len(token)

    def _int(self) -> int:
        self._skip()
        match = _INT.match(self.text, self.pos)
        if not match:
            raise ParseError("expected an integer", position=self.pos)
        self.pos = match.end()
        return int(match.group())

    def parse(self) -> Manifold:
        manifold = self.spec()
        self._skip()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected trailing text {self.text[self.pos:]!r}", position=self.pos)
        return manifold

    def spec(self) -> Manifold:
        self._skip()
        if self.pos >= len(self.text):
            raise ParseError("empty manifold specification", position=self.pos)
        if self.text[self.pos] == "@":
            end = len(self.text)
            if self.depth:
                stops = [i for i in (self.text.find(",", self.pos), self.text.find(")", self.pos)) if i >= 0]
                end = min(stops, default=end)
            path = self.text[self.pos + 1:end].strip()
            if not path:
                raise ParseError("missing file name after '@'", position=self.pos + 1)
            self.pos = end
            return load_matrix_file(path)
        if self.text[self.pos] == "-":
            self.pos += 1
            return self.spec().reversed()

        start = self.pos
        match = _NAME.match(self.text, self.pos)
        if not match:
            raise ParseError(f"expected a manifold name, found {self.text[self.pos]!r}", position=self.pos)
        name = match.group()
        self.pos = match.end()

        if name == "L":
            self._expect("(")
            p = self._int()
            self._expect(",")
            q = self._int()
            self._expect(")")
            return lens_space(p, q)
        if name == "sum":
            self._expect("(")
            self.depth += 1
            a = self.spec()
            self._expect(",")
            b = self.spec()
            self._expect(")")
            self.depth -= 1
            return connected_sum(a, b)
        if name in CATALOG:
            return CATALOG[name]()
        raise ParseError(f"unknown manifold {name!r}", position=start)


def parse_manifold(spec: str) -> Manifold:
    """Resolve a catalog name, ``L(p,q)``, ``sum(A,B)``, ``-A`` or ``@file.json``."""
    try:
        manifold = _Parser(spec).parse()
    except NotCoprime as e:
        logger.debug(f"[Parse] {spec!r}: L({e.p},{e.q}) is not a lens space")
        raise
    logger.debug(f"[Parse] {spec!r} -> {manifold.display_name}")
    return manifold
