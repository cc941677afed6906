"""Shared corpus builders and samplers for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from froblocus import MonomialIdeal, RingContext, SimplicialComplex
from froblocus.criterion import _criterion


def context(n: int) -> RingContext:
    return RingContext(tuple(f"x{i}" for i in range(1, n + 1)))


def mono(ctx: RingContext, *exps: int):
    return ctx.monomial(exps)


def sq(ctx: RingContext, *vertices: int):
    """Squarefree monomial from 1-based vertex labels."""
    return ctx.squarefree(v - 1 for v in vertices)


def ideal_of(ctx: RingContext, *supports: tuple[int, ...]) -> MonomialIdeal:
    """Squarefree ideal from 1-based support tuples."""
    return ctx.ideal([sq(ctx, *s) for s in supports])


def face(*vertices: int) -> frozenset[int]:
    """Face from 1-based vertex labels."""
    return frozenset(v - 1 for v in vertices)


def all_antichains(n: int) -> list[list[frozenset[int]]]:
    """Every nonempty antichain of nonempty subsets of range(n), plus the
    irrelevant complex.  Counts follow the Dedekind numbers."""
    subs = [frozenset(c) for k in range(1, n + 1) for c in combinations(range(n), k)]
    out: list[list[frozenset[int]]] = []

    def rec(i: int, chosen: list[frozenset[int]]) -> None:
        if chosen:
            out.append(list(chosen))
        for j in range(i, len(subs)):
            s = subs[j]
            if all(not (s <= t or t <= s) for t in chosen):
                chosen.append(s)
                rec(j + 1, chosen)
                chosen.pop()

    rec(0, [])
    out.append([frozenset()])
    return out


def exhaustive_complexes(max_n: int) -> list[tuple[RingContext, SimplicialComplex]]:
    pairs = []
    for n in range(1, max_n + 1):
        ctx = context(n)
        for facets in all_antichains(n):
            pairs.append((ctx, SimplicialComplex(n, facets)))
    return pairs


def random_complex(rng: random.Random, n: int) -> SimplicialComplex:
    k = rng.randint(1, 6)
    facets = [
        frozenset(rng.sample(range(n), rng.randint(1, n))) for _ in range(k)
    ]
    return SimplicialComplex(n, facets)


def random_squarefree_ideal(
    rng: random.Random, ctx: RingContext, max_gens: int = 6
) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        size = rng.randint(1, ctx.n)
        gens.append(ctx.squarefree(rng.sample(range(ctx.n), size)))
    return ctx.ideal(gens)


_criterion_cache: dict[tuple[int, tuple], tuple[bool, object]] = {}


def cached_criterion(ideal: MonomialIdeal) -> bool:
    """Criterion verdict memoized on the exponent data (test-side cache)."""
    key = (ideal.context.n, ideal._vecs)
    hit = _criterion_cache.get(key)
    if hit is None:
        hit = _criterion(ideal)
        _criterion_cache[key] = hit
    return hit[0]
