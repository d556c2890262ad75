"""Reading posets and divisors from JSON, files and the constructor DSL.

DSL grammar::

    expr := chain:<k> | antichain:<k> | op(expr) | union(expr,expr) | product(expr,expr)
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .divisors import TorusDivisor
from .errors import ParseError
from .poset import (
    RESERVED,
    Poset,
    antichain,
    chain,
    disjoint_union,
    opposite,
    poset_from_covers,
    product,
)

NAME_RE = re.compile(r"[A-Za-z0-9_.]+")
_TOKEN_RE = re.compile(r"\s*(?:(chain|antichain):(\d+)|(op|union|product)\s*\(|(,)|(\)))")


def check_name(name: object) -> str:
    if not isinstance(name, str) or not NAME_RE.fullmatch(name):
        raise ParseError(f"invalid element name {name!r}: use letters, digits, '_' and '.'")
    if name in RESERVED:
        raise ParseError(f"element name {name!r} is reserved")
    return name


def poset_from_json(data: object) -> Poset:
    if not isinstance(data, dict) or set(data) - {"elements", "covers"} or "elements" not in data:
        raise ParseError('poset JSON must look like {"elements": [...], "covers": [[a, b], ...]}')
    elements = data["elements"]
    covers = data.get("covers", [])
    if not isinstance(elements, list) or not isinstance(covers, list):
        raise ParseError("'elements' and 'covers' must be arrays")
    for name in elements:
        check_name(name)
    pairs = []
    for c in covers:
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)):
            raise ParseError(f"cover {c!r} must be a pair of names")
        pairs.append((c[0], c[1]))
    return poset_from_covers(elements, pairs)


class _DSLParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _next(self):
        m = _TOKEN_RE.match(self.text, self.pos)
        if not m:
            raise ParseError(f"unexpected input at position {self.pos} in {self.text!r}")
        self.pos = m.end()
        return m

    def _expect(self, group: int, what: str) -> None:
        if self._next().group(group) is None:
            raise ParseError(f"expected {what!r} before position {self.pos} in {self.text!r}")

    def expr(self) -> Poset:
        m = self._next()
        if m.group(1):
            k = int(m.group(2))
            return chain(k) if m.group(1) == "chain" else antichain(k)
        op = m.group(3)
        if op is None:
            raise ParseError(f"expected a poset expression at position {m.start()} in {self.text!r}")
        left = self.expr()
        if op == "op":
            self._expect(5, ")")
            return opposite(left)
        self._expect(4, ",")
        right = self.expr()
        self._expect(5, ")")
        return disjoint_union(left, right) if op == "union" else product(left, right)

    def parse(self) -> Poset:
        P = self.expr()
        if self.text[self.pos:].strip():
            raise ParseError(f"trailing input {self.text[self.pos:]!r}")
        return P


def parse_dsl(text: str) -> Poset:
    """
    >>> parse_dsl("union(chain:1,chain:1)").elements
    ('a_p1', 'b_p1')
    """
    return _DSLParser(text).parse()


def load_poset(source: str) -> Poset:
    """Poset from inline JSON, a JSON file path, or a DSL expression."""
    text = source.strip()
    if text.startswith("{"):
        return poset_from_json(_loads(text))
    path = Path(source)
    if path.is_file():
        return poset_from_json(_loads(path.read_text(encoding="utf-8")))
    return parse_dsl(text)


def _loads(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def divisor_from_json(P: Poset, text_or_obj) -> TorusDivisor:
    """Parse ``{"coeffs": {"lower<upper": k, ...}}`` and check the edges."""
    data = _loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    if not isinstance(data, dict) or set(data) != {"coeffs"} or not isinstance(data["coeffs"], dict):
        raise ParseError('divisor JSON must look like {"coeffs": {"lower<upper": k, ...}}')
    for key, a in data["coeffs"].items():
        if isinstance(a, bool) or not isinstance(a, int):
            raise ParseError(f"coefficient of {key!r} must be an integer")
    return TorusDivisor(data["coeffs"]).check(P)
