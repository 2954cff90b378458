"""Textual and JSON descriptions of rings, elements, matrices, and codes.

The grammar (documented in docs/notation.md):

* rings:     ``Z/20``, ``Z/9[x]/(x^2+x+2)``, towers nesting left to right
             with variables x, y, z, ... in that order;
* elements:  integer literals and polynomial expressions in the tower
             variables, e.g. ``7``, ``2*x+1``, ``(2*x+1)*y+x``;
* matrices:  ``[[1,2],[0,0]]``;
* vectors:   ``(1,7)``;
* codes:     ``span Z/20 len 1 { (10), (4) }``.

Every formatter here round-trips through its parser; parse errors carry
a 1-based line and column.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .code import LinearCode
from .errors import NotationError
from .matrix import Matrix
from .ring import (
    IntegerResidueRing,
    QuotientExtensionRing,
    Ring,
    RingElement,
    VARIABLE_NAMES,
    make_integer_residue_ring,
    make_quotient_extension,
)

_SYMBOLS = "+-*^()[]/{},"


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, column = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            column += 1
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(_Token("int", text[start:i], line, column))
            column += i - start
            continue
        if ch.isalpha():
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("name", text[start:i], line, column))
            column += i - start
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, line, column))
            column += 1
            i += 1
            continue
        raise NotationError(f"unexpected character {ch!r}", line, column)
    tokens.append(_Token("end", "", line, column))
    return tokens


class _Stream:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: Optional[str] = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            shown = tok.text if tok.kind != "end" else "end of input"
            raise NotationError(
                f"expected {what or kind!r}, found {shown!r}", tok.line, tok.column
            )
        return self.next()

    def error(self, message: str):
        tok = self.peek()
        raise NotationError(message, tok.line, tok.column)


class _Poly:
    """Polynomial in one fresh variable with coefficients in a base ring.

    Only used while parsing extension moduli; supports exactly the
    arithmetic the expression evaluator needs.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs):
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        self.ring = ring
        self.coeffs = list(coeffs)

    def add(self, other: "_Poly") -> "_Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.ring.zero
        a = self.coeffs + [zero] * (n - len(self.coeffs))
        b = other.coeffs + [zero] * (n - len(other.coeffs))
        return _Poly(self.ring, [x + y for x, y in zip(a, b)])

    def neg(self) -> "_Poly":
        return _Poly(self.ring, [-c for c in self.coeffs])

    def mul(self, other: "_Poly") -> "_Poly":
        zero = self.ring.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return _Poly(self.ring, out)


class _ElementContext:
    """Evaluates expressions directly as ring elements."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.env = _variable_environment(ring)

    def from_int(self, k: int):
        return self.ring.from_int(k)

    def lookup(self, name: str):
        return self.env.get(name)

    add = staticmethod(lambda a, b: a + b)
    mul = staticmethod(lambda a, b: a * b)
    neg = staticmethod(lambda a: -a)


class _PolyContext:
    """Evaluates expressions as polynomials in one fresh variable."""

    def __init__(self, base: Ring, variable: str):
        self.base = base
        self.variable = variable
        self.env = {
            name: _Poly(base, [value])
            for name, value in _variable_environment(base).items()
        }
        self.env[variable] = _Poly(base, [base.zero, base.one])

    def from_int(self, k: int):
        return _Poly(self.base, [self.base.from_int(k)])

    def lookup(self, name: str):
        return self.env.get(name)

    add = staticmethod(lambda a, b: a.add(b))
    mul = staticmethod(lambda a, b: a.mul(b))
    neg = staticmethod(lambda a: a.neg())


def _variable_environment(ring: Ring) -> dict:
    """Tower variables mapped to their images inside ``ring``."""
    if isinstance(ring, IntegerResidueRing):
        return {}
    assert isinstance(ring, QuotientExtensionRing)
    env = {
        name: ring.element(value)
        for name, value in _variable_environment(ring.base).items()
    }
    env[ring.variable] = ring.generator()
    return env


def _parse_expression(stream: _Stream, ctx):
    value = _parse_term(stream, ctx)
    while stream.peek().kind in ("+", "-"):
        op = stream.next().kind
        rhs = _parse_term(stream, ctx)
        value = ctx.add(value, rhs if op == "+" else ctx.neg(rhs))
    return value


def _parse_term(stream: _Stream, ctx):
    value = _parse_factor(stream, ctx)
    while stream.peek().kind == "*":
        stream.next()
        value = ctx.mul(value, _parse_factor(stream, ctx))
    return value


def _parse_factor(stream: _Stream, ctx):
    if stream.peek().kind == "-":
        stream.next()
        return ctx.neg(_parse_factor(stream, ctx))
    value = _parse_atom(stream, ctx)
    if stream.peek().kind == "^":
        stream.next()
        tok = stream.expect("int", "a nonnegative integer exponent")
        exponent = int(tok.text)
        result = ctx.from_int(1)
        for _ in range(exponent):
            result = ctx.mul(result, value)
        return result
    return value


def _parse_atom(stream: _Stream, ctx):
    tok = stream.peek()
    if tok.kind == "int":
        stream.next()
        return ctx.from_int(int(tok.text))
    if tok.kind == "name":
        value = ctx.lookup(tok.text)
        if value is None:
            raise NotationError(f"unknown variable {tok.text!r}", tok.line, tok.column)
        stream.next()
        return value
    if tok.kind == "(":
        stream.next()
        value = _parse_expression(stream, ctx)
        stream.expect(")")
        return value
    stream.error(f"expected a number, variable, or parenthesized expression, found {tok.text!r}")


# -- rings ---------------------------------------------------------------------


def _parse_ring_tokens(stream: _Stream) -> Ring:
    tok = stream.expect("name", "'Z'")
    if tok.text != "Z":
        raise NotationError("ring descriptions start with 'Z/'", tok.line, tok.column)
    stream.expect("/")
    n = int(stream.expect("int", "a modulus").text)
    anchor = stream.peek()
    try:
        ring: Ring = make_integer_residue_ring(n)
    except Exception as exc:
        raise NotationError(str(exc), tok.line, tok.column) from exc
    while stream.peek().kind == "[":
        stream.next()
        var = stream.expect("name", "a variable name")
        expected = (
            VARIABLE_NAMES[ring.depth] if ring.depth < len(VARIABLE_NAMES) else None
        )
        if var.text != expected:
            raise NotationError(
                f"extension level {ring.depth + 1} must use variable "
                f"{expected!r}, found {var.text!r}",
                var.line,
                var.column,
            )
        stream.expect("]")
        stream.expect("/")
        anchor = stream.expect("(")
        poly = _parse_expression(stream, _PolyContext(ring, var.text))
        stream.expect(")")
        try:
            ring = make_quotient_extension(ring, poly.coeffs)
        except Exception as exc:
            raise NotationError(str(exc), anchor.line, anchor.column) from exc
    return ring


def parse_ring(text: str) -> Ring:
    """Parse a ring description such as ``Z/9[x]/(x^2+x+2)``."""
    stream = _Stream(_tokenize(text))
    ring = _parse_ring_tokens(stream)
    stream.expect("end", "end of input")
    return ring


def format_ring(ring: Ring) -> str:
    return ring.description()


# -- elements and vectors --------------------------------------------------------


def parse_element(text: str, ring: Ring) -> RingElement:
    """Parse an element expression in the ring's tower variables."""
    stream = _Stream(_tokenize(text))
    value = _parse_expression(stream, _ElementContext(ring))
    stream.expect("end", "end of input")
    return value


def format_element(element: RingElement) -> str:
    return str(element)


def _parse_vector_tokens(stream: _Stream, ring: Ring) -> tuple[RingElement, ...]:
    stream.expect("(")
    ctx = _ElementContext(ring)
    coords = [_parse_expression(stream, ctx)]
    while stream.peek().kind == ",":
        stream.next()
        coords.append(_parse_expression(stream, ctx))
    stream.expect(")")
    return tuple(coords)


def parse_vector(text: str, ring: Ring) -> tuple[RingElement, ...]:
    """Parse ``(1,7)`` into a coordinate tuple."""
    stream = _Stream(_tokenize(text))
    coords = _parse_vector_tokens(stream, ring)
    stream.expect("end", "end of input")
    return coords


def format_vector(coords: Sequence[RingElement]) -> str:
    return "(" + ",".join(str(c) for c in coords) + ")"


# -- matrices ----------------------------------------------------------------------


def parse_matrix(text: str, ring: Ring) -> Matrix:
    """Parse a matrix literal such as ``[[1,2],[0,0]]``."""
    stream = _Stream(_tokenize(text))
    stream.expect("[")
    ctx = _ElementContext(ring)
    rows = []
    while True:
        stream.expect("[")
        row = [_parse_expression(stream, ctx)]
        while stream.peek().kind == ",":
            stream.next()
            row.append(_parse_expression(stream, ctx))
        stream.expect("]")
        rows.append(row)
        if stream.peek().kind == ",":
            stream.next()
            continue
        break
    stream.expect("]")
    stream.expect("end", "end of input")
    return Matrix(ring, rows)


def format_matrix(matrix: Matrix) -> str:
    return str(matrix)


def matrix_to_json_dict(matrix: Matrix) -> dict:
    return {
        "ring": matrix.ring.description(),
        "entries": [[str(e) for e in row] for row in matrix.entries],
    }


def matrix_from_json_dict(data: dict, ring: Optional[Ring] = None) -> Matrix:
    if ring is None:
        ring = parse_ring(data["ring"])
    entries = [
        [parse_element(cell, ring) for cell in row] for row in data["entries"]
    ]
    return Matrix(ring, entries)


# -- codes -------------------------------------------------------------------------


def parse_code(text: str) -> LinearCode:
    """Parse a full code description: ``span Z/20 len 1 { (10) }``."""
    stream = _Stream(_tokenize(text))
    tok = stream.expect("name", "'span'")
    if tok.text != "span":
        raise NotationError("code descriptions start with 'span'", tok.line, tok.column)
    ring = _parse_ring_tokens(stream)
    tok = stream.expect("name", "'len'")
    if tok.text != "len":
        raise NotationError("expected 'len' after the ring", tok.line, tok.column)
    length = int(stream.expect("int", "the code length").text)
    generators = _parse_generator_set(stream, ring)
    stream.expect("end", "end of input")
    return LinearCode(ring, length, generators)


def parse_generators(
    text: str, ring: Ring, length: Optional[int] = None
) -> LinearCode:
    """Parse a bare generator set ``{ (10), (4) }`` against a known ring.

    The length comes from the first generator unless given explicitly.
    """
    stream = _Stream(_tokenize(text))
    generators = _parse_generator_set(stream, ring)
    stream.expect("end", "end of input")
    if length is None:
        if not generators:
            raise NotationError("a generator-free code needs an explicit length")
        length = len(generators[0])
    return LinearCode(ring, length, generators)


def _parse_generator_set(stream: _Stream, ring: Ring) -> list:
    stream.expect("{")
    generators = []
    if stream.peek().kind != "}":
        generators.append(list(_parse_vector_tokens(stream, ring)))
        while stream.peek().kind == ",":
            stream.next()
            generators.append(list(_parse_vector_tokens(stream, ring)))
    stream.expect("}")
    return generators


def format_code(code: LinearCode) -> str:
    gens = ", ".join(format_vector(g) for g in code.generators)
    return f"span {code.ring.description()} len {code.length} {{ {gens} }}".replace(
        "{  }", "{ }"
    )


def describe_code(code: LinearCode, word_limit: int = 64) -> str:
    """Sorted codeword list when small, generator list plus cardinality
    otherwise."""
    if code.cardinality <= word_limit:
        words = ", ".join(format_vector(w) for w in code.sorted_codewords())
        return f"{{ {words} }}"
    gens = ", ".join(format_vector(g) for g in code.generators[:8])
    suffix = ", ..." if len(code.generators) > 8 else ""
    return (
        f"span {{ {gens}{suffix} }} with {code.cardinality} codewords "
        f"of length {code.length}"
    )


def code_to_json_dict(code: LinearCode) -> dict:
    return {
        "ring": code.ring.description(),
        "length": code.length,
        "generators": [[str(c) for c in g] for g in code.generators],
    }


def code_from_json_dict(data: dict, ring: Optional[Ring] = None) -> LinearCode:
    if ring is None:
        ring = parse_ring(data["ring"])
    generators = [
        [parse_element(c, ring) for c in g] for g in data["generators"]
    ]
    return LinearCode(ring, data["length"], generators)
