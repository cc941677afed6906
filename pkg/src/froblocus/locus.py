"""The closed locus where finite generation fails.

For a proper squarefree ideal the primes at which the attached algebra is
not finitely generated form a Zariski-closed set cut out by an intersection
of face primes: a face F belongs to the locus exactly when the colon ideal
(I : x_F) fails the degree-two criterion.  Two independent routes compute
the same face set:

* algebraic -- run the criterion on (I : x_F) for the empty face and every
  nonempty face of the complex of I;
* combinatorial -- F contributes exactly when the core of link(F) (the link
  with its cone vertices removed) has a free face.

The face set is closed under taking subfaces, so once a face is accepted
its subfaces may be accepted without re-testing; ``prune=False`` re-tests
everything, which the test-suite uses as a consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .criterion import _criterion
from .monomials import Monomial, MonomialIdeal, RingContext
from .simplicial import (
    Face,
    SimplicialComplex,
    face_key,
    face_monomial,
    face_prime,
    format_face,
)

METHODS = ("algebraic", "combinatorial", "both")


class MethodDisagreementError(RuntimeError):
    """The algebraic and combinatorial routes produced different face sets."""


@dataclass(frozen=True)
class Witness:
    """Why a face was accepted into the locus.

    kind is one of ``colon_generator`` (a generator of (K^[2]:K) outside
    K^[2] + (lcm)), ``free_face`` (a free face of the core of the link), or
    ``implied_by`` (membership inherited from a superface during pruning).
    """

    kind: str
    monomial: Monomial | None = None
    face: Face | None = None


@dataclass
class LocusResult:
    """Faces of the non-finitely-generated locus and its defining ideal.

    ``faces`` is downward closed and canonically ordered; ``maximal_faces``
    are the inclusion-maximal members, whose face primes intersect to
    ``defining_ideal``.  An empty locus is encoded by the unit ideal.
    """

    faces: tuple[Face, ...]
    maximal_faces: tuple[Face, ...]
    defining_ideal: MonomialIdeal
    method: str
    witnesses: dict[Face, tuple[Witness, ...]] = field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return not self.faces


def _require_locus_input(ideal: MonomialIdeal) -> None:
    if ideal.is_unit:
        raise ValueError("locus undefined for the unit ideal")
    if not ideal.is_squarefree:
        raise ValueError("locus requires a squarefree ideal")


def _empty_result(context: RingContext, method: str) -> LocusResult:
    return LocusResult((), (), context.unit_ideal(), method, {})


def _face_loop(faces, test, prune: bool) -> dict[Face, Witness]:
    """Accept faces per ``test``; with pruning, subfaces of accepted faces
    are accepted unchecked (membership is closed under taking subfaces)."""
    accepted: dict[Face, Witness] = {}
    for f in sorted(faces, key=face_key, reverse=True):
        if prune:
            implied = next((g for g in accepted if f < g), None)
            if implied is not None:
                accepted[f] = Witness("implied_by", face=implied)
                continue
        witness = test(f)
        if witness is not None:
            accepted[f] = witness
    return accepted


def _assemble(
    context: RingContext, accepted: dict[Face, Witness], method: str
) -> LocusResult:
    faces = tuple(sorted(accepted, key=face_key))
    maximal = tuple(
        f for f in faces if not any(f < g for g in faces)
    )
    if not faces:
        defining = context.unit_ideal()
    else:
        defining = face_prime(maximal[0], context)
        for f in maximal[1:]:
            defining = defining.intersection(face_prime(f, context))
    witnesses = {f: (accepted[f],) for f in faces}
    return LocusResult(faces, maximal, defining, method, witnesses)


def locus_algebraic(
    ideal: MonomialIdeal,
    *,
    prune: bool = True,
    _complex: SimplicialComplex | None = None,
) -> LocusResult:
    """Compute the locus by running the colon criterion on every face."""
    _require_locus_input(ideal)
    context = ideal.context
    if ideal.is_zero:
        return _empty_result(context, "algebraic")
    delta = _complex if _complex is not None else SimplicialComplex.from_ideal(ideal)

    def test(f: Face) -> Witness | None:
        colon = ideal.colon(face_monomial(f, context))
        verdict, offender = _criterion(colon)
        if verdict:
            return None
        return Witness("colon_generator", monomial=offender)

    accepted = _face_loop(delta.faces(), test, prune)
    return _assemble(context, accepted, "algebraic")


def locus_combinatorial(
    delta: SimplicialComplex,
    context: RingContext | None = None,
    *,
    prune: bool = True,
) -> LocusResult:
    """Compute the locus by looking for free faces in cores of links."""
    if context is None:
        context = RingContext(tuple(f"x{i + 1}" for i in range(delta.n)))
    if context.n != delta.n:
        raise ValueError("context size does not match the complex")

    def test(f: Face) -> Witness | None:
        core = delta.link(f).core()
        free = core.free_faces()
        if not free:
            return None
        return Witness("free_face", face=free[0])

    accepted = _face_loop(delta.faces(), test, prune)
    return _assemble(context, accepted, "combinatorial")


def non_fg_locus(
    source: MonomialIdeal | SimplicialComplex,
    *,
    context: RingContext | None = None,
    method: str = "both",
    prune: bool = True,
) -> LocusResult:
    """Dispatch to one or both routes; with both, cross-check them.

    Accepts an ideal or a complex.  A disagreement between the two routes
    is an internal invariant violation and raises MethodDisagreementError.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    if isinstance(source, MonomialIdeal):
        ideal = source
        if context is not None and context != ideal.context:
            raise ValueError("explicit context conflicts with the ideal's")
        context = ideal.context
        _require_locus_input(ideal)
        if ideal.is_zero:
            return _empty_result(context, method)
        delta = SimplicialComplex.from_ideal(ideal)
    elif isinstance(source, SimplicialComplex):
        delta = source
        if context is None:
            context = RingContext(tuple(f"x{i + 1}" for i in range(delta.n)))
        ideal = delta.to_ideal(context)
        if ideal.is_unit:
            raise ValueError("the void complex has the unit ideal; no locus")
        if ideal.is_zero:
            return _empty_result(context, method)
    else:
        raise TypeError("source must be a MonomialIdeal or SimplicialComplex")

    if method == "algebraic":
        return locus_algebraic(ideal, prune=prune, _complex=delta)
    if method == "combinatorial":
        return locus_combinatorial(delta, context, prune=prune)

    algebraic = locus_algebraic(ideal, prune=prune, _complex=delta)
    combinatorial = locus_combinatorial(delta, context, prune=prune)
    if algebraic.faces != combinatorial.faces:
        only_a = [format_face(f) for f in algebraic.faces if f not in combinatorial.faces]
        only_c = [format_face(f) for f in combinatorial.faces if f not in algebraic.faces]
        raise MethodDisagreementError(
            "algebraic and combinatorial loci differ: "
            f"only algebraic {only_a}, only combinatorial {only_c}"
        )
    assert algebraic.defining_ideal == combinatorial.defining_ideal
    witnesses = {}
    for f in algebraic.faces:
        merged = algebraic.witnesses[f] + combinatorial.witnesses[f]
        seen: list[Witness] = []
        for w in merged:
            if w not in seen:
                seen.append(w)
        witnesses[f] = tuple(seen)
    return LocusResult(
        algebraic.faces,
        algebraic.maximal_faces,
        algebraic.defining_ideal,
        "both",
        witnesses,
    )


def is_nci(ideal: MonomialIdeal) -> bool:
    """Nearly-complete-intersection test.

    True iff the ideal is squarefree, generated in degree at least two, not
    itself a complete intersection, and setting any single support variable
    to 1 (after discarding the non-support variables) leaves a complete
    intersection.
    """
    if not ideal.is_squarefree:
        raise ValueError("nearly-complete-intersection test requires squarefree input")
    if ideal.is_zero or ideal.is_unit:
        return False
    if any(g.degree < 2 for g in ideal.generators):
        return False
    if ideal.is_complete_intersection():
        return False
    support = ideal.support()
    outside = frozenset(range(ideal.context.n)) - support
    for i in sorted(support):
        if not ideal.localize(outside | {i}).is_complete_intersection():
            return False
    return True


def nci_locus(ideal: MonomialIdeal) -> LocusResult:
    """Shortcut locus for nearly complete intersections.

    Either empty, or cut out by the prime of the support variables; the
    face set is then the full power set of the non-support vertices.
    """
    if not is_nci(ideal):
        raise ValueError("ideal is not a nearly complete intersection")
    context = ideal.context
    verdict, offender = _criterion(ideal)
    if verdict:
        return _empty_result(context, "nci")
    base = frozenset(range(context.n)) - ideal.support()
    members = sorted(_subsets(base), key=face_key)
    accepted: dict[Face, Witness] = {}
    for f in members:
        if f == base:
            accepted[f] = Witness("colon_generator", monomial=offender)
        else:
            accepted[f] = Witness("implied_by", face=base)
    return _assemble(context, accepted, "nci")


def _subsets(vertices: frozenset[int]) -> list[Face]:
    out: list[Face] = [frozenset()]
    for v in sorted(vertices):
        out += [f | {v} for f in out]
    return out
