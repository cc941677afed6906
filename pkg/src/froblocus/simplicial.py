"""Simplicial complexes and the squarefree-ideal correspondence.

A complex lives on the vertex index range ``0..n-1`` of a ring context, but
carries its own *active* vertex universe: taking a link removes the linked
vertices from the universe, which is exactly what makes
``link(F).to_ideal(ctx) == I.colon(face_monomial(F, ctx))`` hold.  Vertices
in the universe that appear in no facet are non-faces (their variables
generate), while vertices outside the universe simply do not occur.

The void complex (no facets) and the irrelevant complex (only the empty
face) are distinct representable states.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .monomials import Monomial, MonomialIdeal, RingContext

Face = frozenset[int]


def face_key(face: Face) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: by cardinality, then lexicographic."""
    return (len(face), tuple(sorted(face)))


def format_face(face: Face) -> str:
    """Render a face with 1-based vertex labels, e.g. ``{1,3}``."""
    return "{" + ",".join(str(v + 1) for v in sorted(face)) + "}"


def face_monomial(face: Face, context: RingContext) -> Monomial:
    """The squarefree monomial whose support is the face."""
    return context.squarefree(face)


def face_prime(face: Face, context: RingContext) -> MonomialIdeal:
    """The prime ideal generated by the variables outside the face."""
    gens = [context.variable(i) for i in range(context.n) if i not in face]
    return context.ideal(gens)


class SimplicialComplex:
    """A simplicial complex given by its facets (maximal faces)."""

    __slots__ = ("n", "vertices", "facets", "_faces")

    def __init__(
        self,
        n: int,
        facets: Iterable[Iterable[int]] = (),
        *,
        vertices: Iterable[int] | None = None,
    ):
        if n < 1:
            raise ValueError("need at least one vertex slot")
        self.n = n
        universe = frozenset(range(n)) if vertices is None else frozenset(vertices)
        for v in universe:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range 0..{n - 1}")
        self.vertices = universe
        raw = [frozenset(f) for f in facets]
        for f in raw:
            if not f <= universe:
                raise ValueError(f"facet {sorted(f)} not inside the vertex universe")
        # keep only maximal faces, canonically ordered
        maximal = [
            f for f in set(raw) if not any(f < g for g in raw)
        ]
        self.facets = tuple(sorted(maximal, key=face_key))
        self._faces: tuple[Face, ...] | None = None

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (frozenset(),)

    def is_face(self, face: Iterable[int]) -> bool:
        f = frozenset(face)
        return any(f <= h for h in self.facets)

    def faces(self) -> tuple[Face, ...]:
        """All faces, empty face first, then by cardinality and lex order."""
        if self._faces is None:
            seen: set[Face] = set()
            stack = list(self.facets)
            while stack:
                f = stack.pop()
                if f in seen:
                    continue
                seen.add(f)
                for v in f:
                    g = f - {v}
                    if g not in seen:
                        stack.append(g)
            self._faces = tuple(sorted(seen, key=face_key))
        return self._faces

    def __iter__(self) -> Iterator[Face]:
        return iter(self.faces())

    def link(self, face: Iterable[int]) -> SimplicialComplex:
        """The link of a face, on the universe minus the face."""
        f = frozenset(face)
        if not self.is_face(f):
            raise ValueError(f"{format_face(f)} is not a face")
        new_facets = [h - f for h in self.facets if f <= h]
        return SimplicialComplex(self.n, new_facets, vertices=self.vertices - f)

    def core(self) -> SimplicialComplex:
        """The complex with its cone vertices (common to all facets) removed."""
        if not self.facets:
            return self
        apex = frozenset.intersection(*self.facets)
        if not apex:
            return self
        return self.link(apex)

    def free_faces(self) -> tuple[Face, ...]:
        """Nonempty proper faces contained in exactly one facet."""
        out = []
        for f in self.faces():
            if not f:
                continue
            holders = [h for h in self.facets if f <= h]
            if len(holders) == 1 and f != holders[0]:
                out.append(f)
        return tuple(out)

    def has_free_face(self) -> bool:
        for f in self.faces():
            if not f:
                continue
            count = 0
            last = None
            for h in self.facets:
                if f <= h:
                    count += 1
                    last = h
                    if count > 1:
                        break
            if count == 1 and f != last:
                return True
        return False

    def to_ideal(self, context: RingContext) -> MonomialIdeal:
        """The squarefree ideal of the non-faces (within the active universe).

        Equals the intersection of the facet primes; the void complex maps
        to the unit ideal, the irrelevant complex to the ideal of all active
        variables.
        """
        if context.n != self.n:
            raise ValueError(
                f"context has {context.n} variables, complex expects {self.n}"
            )
        result = context.unit_ideal()
        for facet in self.facets:
            gens = [context.variable(i) for i in sorted(self.vertices - facet)]
            result = result.intersection(context.ideal(gens))
        return result

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> SimplicialComplex:
        """The complex of a proper squarefree ideal, on the full universe.

        Facets are complements of the minimal primes' variable sets; the
        zero ideal gives the full simplex.
        """
        if ideal.is_unit:
            raise ValueError("the unit ideal has no complex")
        if not ideal.is_squarefree:
            raise ValueError("ideal must be squarefree")
        n = ideal.context.n
        supports = [g.support for g in ideal.generators]
        covers = _minimal_transversals(supports)
        everything = frozenset(range(n))
        return cls(n, [everything - c for c in covers])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (
            self.n == other.n
            and self.vertices == other.vertices
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.n, self.vertices, self.facets))

    def __repr__(self) -> str:
        body = ", ".join(format_face(f) for f in self.facets) or "void"
        return f"SimplicialComplex(n={self.n}; {body})"


def _minimal_transversals(supports: list[frozenset[int]]) -> list[frozenset[int]]:
    """Minimal hitting sets of a family of vertex sets, by recursive splitting."""
    found: list[frozenset[int]] = []

    def extend(remaining: list[frozenset[int]], chosen: frozenset[int]) -> None:
        if not remaining:
            found.append(chosen)
            return
        first = remaining[0]
        for v in sorted(first):
            rest = [s for s in remaining[1:] if v not in s]
            extend(rest, chosen | {v})

    extend(list(supports), frozenset())
    minimal = [c for c in set(found) if not any(d < c for d in found)]
    return sorted(minimal, key=face_key)
