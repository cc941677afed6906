"""Text input: monomial expressions and problem files.

Problem files declare the ring on a ``vars:`` line and then exactly one of

    ideal: x*w, y*w, z*b
    facets: 1 2 5; 1 3 5; 1 2 4

Monomial grammar: ``*``-separated variable tokens with optional ``^k``
powers; ``1`` is the constant monomial.  Facet vertices are 1-based.
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monomials import EXPONENT_LIMIT, Monomial, MonomialIdeal, RingContext
from .simplicial import Face, SimplicialComplex


class ParseError(ValueError):
    """Malformed CLI or problem-file input."""


def parse_variables(text: str) -> RingContext:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names:
        raise ParseError("no variable names given")
    try:
        return RingContext(tuple(names))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_monomial(text: str, context: RingContext) -> Monomial:
    exps = [0] * context.n
    body = text.strip()
    if not body:
        raise ParseError("empty monomial expression")
    for token in body.split("*"):
        token = token.strip()
        if not token:
            raise ParseError(f"empty factor in {text!r}")
        if token == "1":
            continue
        name, caret, power = token.partition("^")
        name = name.strip()
        if caret:
            power = power.strip()
            if not power.isdigit():
                raise ParseError(f"bad exponent in {token!r}")
            k = int(power)
            if k > EXPONENT_LIMIT:
                raise ParseError(f"exponent {k} exceeds limit {EXPONENT_LIMIT}")
        else:
            k = 1
        try:
            i = context.index_of(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r}") from None
        exps[i] += k
        if exps[i] > EXPONENT_LIMIT:
            raise ParseError(f"exponent of {name!r} exceeds limit {EXPONENT_LIMIT}")
    return context.monomial(exps)


def parse_face(text: str, n: int) -> Face:
    """Whitespace-separated 1-based vertex indices; empty text is the empty face."""
    verts = set()
    for token in text.replace(",", " ").split():
        if not token.isdigit():
            raise ParseError(f"bad vertex index {token!r}")
        v = int(token)
        if not 1 <= v <= n:
            raise ParseError(f"vertex {v} outside 1..{n}")
        verts.add(v - 1)
    return frozenset(verts)


@dataclass
class ProblemInput:
    """A parsed problem: the ring plus an ideal or a facet list."""

    context: RingContext
    ideal: MonomialIdeal | None = None
    complex: SimplicialComplex | None = None


def parse_problem(text: str) -> ProblemInput:
    context: RingContext | None = None
    ideal: MonomialIdeal | None = None
    complex_: SimplicialComplex | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, value = line.partition(":")
        if not colon:
            raise ParseError(f"line {lineno}: expected 'key: value', got {raw!r}")
        key = key.strip().lower()
        if key == "vars":
            if context is not None:
                raise ParseError(f"line {lineno}: duplicate vars declaration")
            context = parse_variables(value)
        elif key == "ideal":
            if context is None:
                raise ParseError(f"line {lineno}: vars must come before ideal")
            if ideal is not None or complex_ is not None:
                raise ParseError(f"line {lineno}: duplicate problem body")
            gens = [t for t in value.split(",") if t.strip()]
            ideal = context.ideal([parse_monomial(t, context) for t in gens])
        elif key == "facets":
            if context is None:
                raise ParseError(f"line {lineno}: vars must come before facets")
            if ideal is not None or complex_ is not None:
                raise ParseError(f"line {lineno}: duplicate problem body")
            groups = [g for g in value.split(";") if g.strip()]
            if not groups:
                raise ParseError(f"line {lineno}: no facets given")
            facets = [parse_face(g, context.n) for g in groups]
            complex_ = SimplicialComplex(context.n, facets)
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
    if context is None:
        raise ParseError("missing vars declaration")
    if ideal is None and complex_ is None:
        raise ParseError("missing ideal or facets declaration")
    return ProblemInput(context, ideal, complex_)
