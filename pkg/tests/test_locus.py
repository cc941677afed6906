"""Locus computation: golden examples, invariants, the shortcut for
nearly complete intersections, and the two-route cross-check."""

import pytest

from froblocus import (
    MethodDisagreementError,
    RingContext,
    SimplicialComplex,
    is_nci,
    locus_algebraic,
    locus_combinatorial,
    nci_locus,
    non_fg_locus,
)
from froblocus import locus as locus_module
from helpers import context, face, ideal_of


@pytest.fixture
def example_one():
    ctx = RingContext(("x", "y", "z", "w", "a", "b"))
    delta = SimplicialComplex(6, [face(1, 2, 3), face(1, 2, 6), face(3, 4, 5)])
    return ctx, delta, delta.to_ideal(ctx)


class TestGoldenExamples:
    def test_example_one(self, example_one):
        ctx, delta, ideal = example_one
        result = non_fg_locus(ideal, method="both")
        assert result.defining_ideal == ctx.ideal(
            [ctx.variable(i) for i in (0, 1, 3, 4, 5)]
        )
        assert result.faces == (frozenset(), face(3))
        assert result.maximal_faces == (face(3),)
        assert str(result.defining_ideal) == "(x, y, w, a, b)"

    def test_example_two(self):
        ctx = context(5)
        delta = SimplicialComplex(5, [face(1, 2, 5), face(1, 3, 5), face(1, 2, 4)])
        ideal = delta.to_ideal(ctx)
        assert ideal == ideal_of(ctx, (2, 3), (3, 4), (4, 5))
        result = non_fg_locus(ideal, method="both")
        assert result.defining_ideal == ideal_of(ctx, (2,), (3,), (4,), (5,))
        assert result.faces == (frozenset(), face(1))

    def test_example_three(self):
        ctx = context(3)
        ideal = ideal_of(ctx, (1, 2), (2, 3))
        result = non_fg_locus(ideal, method="both")
        assert result.defining_ideal == ideal_of(ctx, (1,), (2,), (3,))
        assert result.faces == (frozenset(),)

    def test_example_four(self):
        ctx = context(4)
        ideal = ideal_of(ctx, (1, 2, 3), (3, 4))
        result = non_fg_locus(ideal, method="both")
        assert result.defining_ideal == ideal_of(ctx, (1, 2), (3,), (4,))
        assert result.faces == (frozenset(), face(1), face(2))
        assert result.maximal_faces == (face(1), face(2))


class TestEdgeCases:
    def test_zero_ideal(self):
        ctx = context(3)
        result = non_fg_locus(ctx.zero_ideal())
        assert result.empty
        assert result.defining_ideal.is_unit

    def test_unit_rejected(self):
        ctx = context(3)
        with pytest.raises(ValueError):
            non_fg_locus(ctx.unit_ideal())
        with pytest.raises(ValueError):
            locus_algebraic(ctx.ideal([ctx.monomial((2, 0, 0))]))

    def test_triangle_boundary_empty(self):
        delta = SimplicialComplex(3, [face(1, 2), face(2, 3), face(1, 3)])
        result = non_fg_locus(delta)
        assert result.empty
        assert result.defining_ideal.is_unit

    def test_full_simplex_on_two_vertices(self):
        # ideal is zero, so the locus is empty; both routes agree
        delta = SimplicialComplex(2, [face(1, 2)])
        result = non_fg_locus(delta)
        assert result.empty
        comb = locus_combinatorial(delta)
        assert comb.empty

    def test_maximal_ideal_is_fine(self):
        ctx = context(3)
        result = non_fg_locus(ideal_of(ctx, (1,), (2,), (3,)))
        assert result.empty

    def test_complex_dispatch_with_default_context(self):
        delta = SimplicialComplex(3, [face(2), face(1, 3)])
        result = non_fg_locus(delta)
        assert result.defining_ideal.context.names == ("x1", "x2", "x3")
        assert [str(g) for g in result.defining_ideal.generators] == [
            "x1",
            "x2",
            "x3",
        ]


class TestResultInvariants:
    def test_downward_closure_and_squarefree(self, example_one):
        _, _, ideal = example_one
        result = non_fg_locus(ideal)
        members = set(result.faces)
        for f in members:
            for v in f:
                assert f - {v} in members
        assert result.defining_ideal.is_squarefree

    def test_defining_ideal_over_all_faces(self, example_one):
        ctx, _, ideal = example_one
        from froblocus import face_prime

        result = non_fg_locus(ideal)
        full = ctx.unit_ideal()
        for f in result.faces:
            full = full.intersection(face_prime(f, ctx))
        assert full == result.defining_ideal

    def test_determinism(self, example_one):
        _, _, ideal = example_one
        assert non_fg_locus(ideal) == non_fg_locus(ideal)

    def test_prune_matches_no_prune(self, example_one):
        _, _, ideal = example_one
        pruned = non_fg_locus(ideal, prune=True)
        full = non_fg_locus(ideal, prune=False)
        assert pruned.faces == full.faces
        assert pruned.maximal_faces == full.maximal_faces
        assert pruned.defining_ideal == full.defining_ideal

    def test_witnesses_present(self, example_one):
        _, _, ideal = example_one
        result = non_fg_locus(ideal, method="both", prune=False)
        for f in result.faces:
            kinds = [w.kind for w in result.witnesses[f]]
            assert kinds == ["colon_generator", "free_face"]

    def test_pruned_witnesses_are_marked(self, example_one):
        _, _, ideal = example_one
        result = locus_algebraic(ideal, prune=True)
        empty_face_witness = result.witnesses[frozenset()][0]
        assert empty_face_witness.kind == "implied_by"
        assert empty_face_witness.face == face(3)

    def test_method_tags(self, example_one):
        _, delta, ideal = example_one
        assert locus_algebraic(ideal).method == "algebraic"
        assert locus_combinatorial(delta).method == "combinatorial"
        assert non_fg_locus(ideal).method == "both"

    def test_disagreement_aborts(self, example_one, monkeypatch):
        _, _, ideal = example_one
        real = locus_module.locus_combinatorial

        def broken(delta, ctx=None, *, prune=True):
            result = real(delta, ctx, prune=prune)
            result.faces = result.faces[1:]
            return result

        monkeypatch.setattr(locus_module, "locus_combinatorial", broken)
        with pytest.raises(MethodDisagreementError):
            locus_module.non_fg_locus(ideal, method="both")


class TestNci:
    def test_path_is_nci(self):
        ctx = context(3)
        assert is_nci(ideal_of(ctx, (1, 2), (2, 3)))

    def test_exclusions(self):
        ctx = context(4)
        assert not is_nci(ideal_of(ctx, (1, 2), (3, 4)))  # complete intersection
        assert not is_nci(ideal_of(ctx, (1,)))  # degree one
        assert not is_nci(ctx.zero_ideal())
        assert not is_nci(ctx.unit_ideal())

    def test_more_nci_families(self):
        ctx = context(4)
        assert is_nci(ideal_of(ctx, (1, 2), (2, 3), (3, 4)))
        assert is_nci(ideal_of(ctx, (1, 2), (1, 3), (1, 4)))
        ctx3 = context(3)
        assert is_nci(ideal_of(ctx3, (1, 2), (2, 3), (1, 3)))

    def test_nci_locus_path(self):
        ctx = context(3)
        result = nci_locus(ideal_of(ctx, (1, 2), (2, 3)))
        assert result.defining_ideal == ideal_of(ctx, (1,), (2,), (3,))
        assert result.faces == (frozenset(),)
        assert result.method == "nci"

    def test_nci_locus_empty_branch(self):
        # the triangle of edges is nearly complete and finitely generated
        ctx = context(3)
        triangle = ideal_of(ctx, (1, 2), (2, 3), (1, 3))
        result = nci_locus(triangle)
        assert result.empty

    def test_nci_locus_with_spare_vertex(self):
        ctx = context(4)
        ideal = ideal_of(ctx, (1, 2), (2, 3))
        result = nci_locus(ideal)
        assert result.defining_ideal == ideal_of(ctx, (1,), (2,), (3,))
        assert result.faces == (frozenset(), face(4))
        assert result.maximal_faces == (face(4),)
        direct = locus_algebraic(ideal)
        assert result.faces == direct.faces
        assert result.defining_ideal == direct.defining_ideal

    def test_requires_nci(self):
        ctx = context(4)
        with pytest.raises(ValueError):
            nci_locus(ideal_of(ctx, (1, 2), (3, 4)))

    def test_agreement_with_algebraic_on_random_ncis(self):
        import random

        rng = random.Random(31)
        found = 0
        for _ in range(300):
            n = rng.randint(2, 6)
            ctx = context(n)
            gens = [
                ctx.squarefree(rng.sample(range(n), rng.randint(2, n)))
                for _ in range(rng.randint(2, 4))
            ]
            ideal = ctx.ideal(gens)
            if ideal.is_unit or ideal.is_zero or not ideal.is_squarefree:
                continue
            if any(g.degree < 2 for g in ideal.generators):
                continue
            if not is_nci(ideal):
                continue
            found += 1
            shortcut = nci_locus(ideal)
            direct = locus_algebraic(ideal)
            assert shortcut.faces == direct.faces
            assert shortcut.defining_ideal == direct.defining_ideal
        assert found >= 5
