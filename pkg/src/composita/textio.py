"""Textual series descriptions and exact rendering of series and triangles.

A series description is one of::

    builtin:NAME
    builtin:NAME(p1, p2, ...)
    coeffs:[r0, r1, ...]

optionally followed by ``order:N``.  Numbers are integers or ``p/q``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .catalog import BuiltinSpec, builtin_series, triangle_series
from .engine import Composita
from .seqfile import SequenceFile, format_bfile
from .series import Series, make_series, shift_up

__all__ = [
    "SpecParseError",
    "SeriesSpec",
    "parse_spec",
    "format_rational",
    "format_values",
    "render_triangle",
    "render_series",
    "triangle_to_json",
]

_NUMBER = re.compile(r"[+-]?\d+(?:/\d+)?")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_ORDER = re.compile(r"\d+")


class SpecParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.column = col


@dataclass(frozen=True)
class SeriesSpec:
    kind: str  # "builtin" or "coeffs"
    name: str = ""
    params: tuple[Fraction, ...] = ()
    coeffs: tuple[Fraction, ...] = ()
    order: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "builtin":
            body = f"builtin:{self.name}"
            if self.params:
                body += "(" + ",".join(format_rational(p) for p in self.params) + ")"
        else:
            body = "coeffs:[" + ",".join(format_rational(c) for c in self.coeffs) + "]"
        if self.order is not None:
            body += f" order:{self.order}"
        return body

    def builtin_spec(self, order: int) -> BuiltinSpec:
        return BuiltinSpec(self.name, self.params, order)

    def series(self, order: int) -> Series:
        """The described series to ``x^order``; explicit coefficients are zero-padded."""
        if self.kind == "builtin":
            return builtin_series(self.builtin_spec(order))
        return make_series(self.coeffs[: order + 1], order)

    def triangle_kind(self) -> str:
        """``"h"`` if the triangle is that of ``x*series``, ``"g"`` if of the series itself."""
        if self.kind == "builtin":
            return self.builtin_spec(0).kind
        return "h" if self.coeffs and self.coeffs[0] != 0 else "g"

    def triangle_series(self, order: int) -> Series:
        if self.kind == "builtin":
            return triangle_series(self.builtin_spec(order))
        if not any(self.coeffs[: order + 1]):
            raise ValueError("composita requires g(0)=0 and a nonzero series")
        if self.triangle_kind() == "h":
            return shift_up(self.series(max(order - 1, 0)))
        return self.series(order)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: Optional[int] = None):
        return SpecParseError(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos : self.pos + 1] or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def match(self, pattern: re.Pattern, what: str) -> str:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        self.pos = m.end()
        return m.group(0)

    def number(self) -> Fraction:
        start = self.pos
        tok = self.match(_NUMBER, "a rational number like 3 or -1/2")
        try:
            return Fraction(tok)
        except ZeroDivisionError:
            raise self.error("zero denominator", start) from None

    def number_list(self, close: str) -> list[Fraction]:
        values = []
        if self.peek() == close:
            return values
        values.append(self.number())
        while self.peek() == ",":
            self.pos += 1
            values.append(self.number())
        return values

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_spec(text: str) -> SeriesSpec:
    """Parse a series description; errors carry line and column."""
    sc = _Scanner(text)
    head = sc.match(_NAME, "'builtin:' or 'coeffs:'")
    if head not in ("builtin", "coeffs"):
        raise sc.error(f"unknown spec kind {head!r}; use 'builtin:' or 'coeffs:'", 0)
    sc.expect(":")
    if head == "builtin":
        name = sc.match(_NAME, "a builtin name")
        params: list[Fraction] = []
        if sc.peek() == "(":
            sc.pos += 1
            params = sc.number_list(")")
            sc.expect(")")
        spec = SeriesSpec("builtin", name=name, params=tuple(params))
    else:
        sc.expect("[")
        coeffs = sc.number_list("]")
        sc.expect("]")
        if not coeffs:
            raise sc.error("coefficient list is empty")
        spec = SeriesSpec("coeffs", coeffs=tuple(coeffs))
    order = None
    if not sc.at_end():
        word = sc.match(_NAME, "'order:' or end of input")
        if word != "order":
            raise sc.error(f"unexpected {word!r}", sc.pos - len(word))
        sc.expect(":")
        order = int(sc.match(_ORDER, "a non-negative order"))
        if not sc.at_end():
            raise sc.error("trailing characters after order")
    return SeriesSpec(spec.kind, spec.name, spec.params, spec.coeffs, order)


def format_rational(q) -> str:
    """Lowest-terms ``p/q``, integers without a denominator."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_values(values: Iterable, sep: str = " ") -> str:
    return sep.join(format_rational(v) for v in values)


def render_triangle(tri: Composita, fmt: str = "plain") -> str:
    if fmt == "plain":
        cells = [[format_rational(v) for v in row] for row in tri.rows]
        width = max(len(c) for row in cells for c in row)
        lines = [" ".join(c.center(width) for c in row) for row in cells]
        total = len(lines[-1])
        return "\n".join(line.center(total).rstrip() for line in lines) + "\n"
    if fmt == "csv":
        out = ["n,k,value"]
        out.extend(f"{n},{k},{format_rational(v)}" for n, k, v in tri)
        return "\n".join(out) + "\n"
    if fmt == "json":
        return json.dumps(triangle_to_json(tri)) + "\n"
    raise ValueError(f"format {fmt!r} is not available for triangles")


def triangle_to_json(tri: Composita) -> dict:
    return {
        "order": tri.order,
        "rows": [[format_rational(v) for v in row] for row in tri.rows],
    }


def render_series(values: list, fmt: str = "plain", offset: int = 0) -> str:
    """Render a coefficient list; ``bfile`` needs integer values."""
    if fmt == "plain":
        return format_values(values) + "\n"
    if fmt == "csv":
        out = ["n,value"]
        out.extend(f"{offset + i},{format_rational(v)}" for i, v in enumerate(values))
        return "\n".join(out) + "\n"
    if fmt == "json":
        return json.dumps({"offset": offset, "values": [format_rational(v) for v in values]}) + "\n"
    if fmt == "bfile":
        return format_bfile(SequenceFile(offset, tuple(values)))
    raise ValueError(f"unknown format {fmt!r}")
