"""Parser for the one-line diagram format.

    K-=C(i,1,1)*H; K+=C(j,1,3)*H; H=gen{(i,i),(j,-j)}

Each isotropy group is ``C(axis,p,q)`` or ``DS3``, optionally followed by
``*H``.  The three clauses may come in any order.
"""

from __future__ import annotations

import re

from .diagram import TRIVIAL, Diagram, IsotropySubgroup
from .errors import ClosureExceedsCap, ParseError
from .groups import SlopeCircle, closure
from .qfield import GroupElement, parse_quaternion

__all__ = ["parse", "parse_element", "parse_elements"]

_WS = re.compile(r"\s*")
_INT = re.compile(r"[+-]?\d+")
_QLIT = re.compile(r"-?\s*(?:e\s*\([^()]*\)|[1ijk])")


class _Cursor:
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = offset

    def skip(self):
        self.pos = _WS.match(self.text, self.pos).end()

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def peek(self, literal: str) -> bool:
        self.skip()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str):
        if not self.peek(literal):
            found = self.text[self.pos : self.pos + 8] or "end of input"
            raise ParseError(f"expected {literal!r}, found {found!r}", self.pos)
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise ParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def quaternion(self):
        self.skip()
        m = _QLIT.match(self.text, self.pos)
        if not m:
            raise ParseError("expected a quaternion literal like 1, -i, e(j,1/8)", self.pos)
        start = self.pos
        self.pos = m.end()
        return parse_quaternion(m.group(), start)


def _element(cur: _Cursor) -> GroupElement:
    start = (cur.skip(), cur.pos)[1]
    cur.expect("(")
    left = cur.quaternion()
    cur.expect(",")
    right = cur.quaternion()
    cur.expect(")")
    if not (left.is_unit() and right.is_unit()):
        raise ParseError("group elements need unit quaternions", start)
    return GroupElement(left, right)


def parse_element(text: str) -> GroupElement:
    """Parse a single pair literal such as ``(i,-i)``."""
    cur = _Cursor(text)
    g = _element(cur)
    if not cur.at_end():
        raise ParseError("trailing input after element", cur.pos)
    return g


def parse_elements(text: str) -> list[GroupElement]:
    """Parse ``gen{...}`` or a bare comma separated list of pairs."""
    cur = _Cursor(text)
    braced = cur.peek("gen")
    if braced:
        cur.expect("gen")
        cur.expect("{")
    out = []
    while not (cur.peek("}") if braced else cur.at_end()):
        out.append(_element(cur))
        if not cur.peek(","):
            break
        cur.expect(",")
    if braced:
        cur.expect("}")
    if not cur.at_end():
        raise ParseError("trailing input after element list", cur.pos)
    return out


def _isotropy(cur: _Cursor):
    """Return (kind, circle or None, uses_H)."""
    if cur.peek("DS3"):
        cur.expect("DS3")
        kind, circle = "ds3", None
    elif cur.peek("C"):
        cur.expect("C")
        cur.expect("(")
        cur.skip()
        axis = cur.text[cur.pos : cur.pos + 1]
        if axis not in ("i", "j", "k"):
            raise ParseError("circle axis must be one of i, j, k", cur.pos)
        cur.pos += 1
        cur.expect(",")
        p = cur.integer()
        cur.expect(",")
        q = cur.integer()
        cur.expect(")")
        if p == 0 and q == 0:
            raise ParseError("slope (0,0) does not define a circle", cur.pos)
        kind, circle = "circle", SlopeCircle(axis, p, q)
    else:
        raise ParseError(
            "isotropy group must be C(<axis>,<p>,<q>) or DS3, optionally followed by *H", cur.pos
        )
    uses_h = False
    if cur.peek("*"):
        cur.expect("*")
        cur.expect("H")
        uses_h = True
    return kind, circle, uses_h


def parse(text: str) -> Diagram:
    """Build a Diagram from its text form; validation is a separate step."""
    cur = _Cursor(text)
    clauses: dict[str, object] = {}
    while not cur.at_end():
        start = cur.pos
        for label in ("K-", "K+", "H"):
            if cur.peek(label):
                break
        else:
            raise ParseError("expected a clause starting with K-=, K+= or H=", start)
        if label in clauses:
            raise ParseError(f"duplicate clause {label}", start)
        cur.expect(label)
        cur.expect("=")
        if label == "H":
            cur.expect("gen")
            cur.expect("{")
            gens = []
            while not cur.peek("}"):
                gens.append(_element(cur))
                if not cur.peek(","):
                    break
                cur.expect(",")
            cur.expect("}")
            clauses["H"] = (gens, start)
        else:
            clauses[label] = _isotropy(cur)
        if cur.at_end():
            break
        cur.expect(";")
    for label in ("K-", "K+", "H"):
        if label not in clauses:
            raise ParseError(f"missing clause {label}=", len(text))
    gens, hpos = clauses["H"]
    try:
        H = closure(gens)
    except ClosureExceedsCap as exc:
        raise ParseError(f"H is not a supported finite group: {exc}", hpos) from exc

    def build(spec):
        kind, circle, uses_h = spec
        F = H if uses_h else TRIVIAL
        if kind == "ds3":
            return IsotropySubgroup.diag_s3(F)
        return IsotropySubgroup.circle_dot(circle, F)

    return Diagram(build(clauses["K-"]), build(clauses["K+"]), H)
