"""Subgraph containment, disjoint families, and the through-vertex check."""

import random

import pytest

from turanlab import (
    Embedding,
    ForbiddenFamily,
    SimpleGraph,
    complete,
    complete_multipartite,
    contains_disjoint_family,
    contains_disjoint_family_through,
    contains_subgraph,
    cycle,
    disjoint_union,
    embedding_is_valid,
    is_free,
    path,
    turan,
    wheel,
)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    return SimpleGraph(n, edges)


class TestContainsSubgraph:
    def test_triangle_in_complete(self):
        emb = contains_subgraph(complete(5), complete(3))
        assert emb is not None
        assert embedding_is_valid(complete(5), complete(3), emb)

    def test_triangle_not_in_bipartite(self):
        assert contains_subgraph(turan(8, 2), complete(3)) is None

    def test_subgraph_not_induced(self):
        # C_4 sits inside K_4 as a non-induced subgraph
        assert contains_subgraph(complete(4), cycle(4)) is not None

    def test_pattern_larger_than_host(self):
        assert contains_subgraph(complete(3), complete(4)) is None

    def test_wheel_in_itself_and_supergraph(self):
        assert contains_subgraph(wheel(7), wheel(7)) is not None
        assert contains_subgraph(complete(7), wheel(7)) is not None

    def test_found_embeddings_are_valid(self):
        rng = random.Random(23)
        patterns = [complete(3), path(4), cycle(4), cycle(5)]
        for _ in range(50):
            host = random_graph(rng, rng.randint(4, 8))
            for pat in patterns:
                emb = contains_subgraph(host, pat)
                if emb is not None:
                    assert embedding_is_valid(host, pat, emb)


class TestForbiddenFamily:
    def test_validates_patterns(self):
        with pytest.raises(ValueError):
            ForbiddenFamily([])
        with pytest.raises(ValueError):
            ForbiddenFamily([SimpleGraph(0)])

    def test_total_order_and_chromatic(self):
        fam = ForbiddenFamily([wheel(7), complete(3)])
        assert fam.total_order == 10
        assert fam.chromatic_numbers == (3, 3)
        assert fam.min_chromatic == 3
        assert len(fam) == 2

    def test_order_is_significant(self):
        fam = ForbiddenFamily([complete(3), complete(4)])
        assert fam[0] == complete(3)
        assert fam[1] == complete(4)


class TestDisjointFamily:
    def test_two_triangles(self):
        host = disjoint_union([complete(3), complete(3)])
        fam = ForbiddenFamily([complete(3), complete(3)])
        found = contains_disjoint_family(host, fam)
        assert found is not None
        used = set()
        for emb in found:
            assert not used & emb.vertex_set()
            used |= emb.vertex_set()

    def test_overlap_not_allowed(self):
        # K_4 holds many triangles but no two vertex-disjoint ones
        fam = ForbiddenFamily([complete(3), complete(3)])
        assert contains_disjoint_family(complete(4), fam) is None
        assert is_free(complete(4), fam)

    def test_single_pattern_family(self):
        assert contains_disjoint_family(complete(4), [complete(3)]) is not None

    def test_total_order_exceeds_host(self):
        fam = ForbiddenFamily([complete(3), complete(3)])
        assert contains_disjoint_family(complete(5), fam) is None


class TestThroughVertex:
    def test_requires_the_vertex(self):
        # one triangle at vertices 3,4,5 of K_3 + K_3; vertex 0 in the other
        host = disjoint_union([complete(3), complete(3)])
        fam = ForbiddenFamily([complete(3), complete(3)])
        assert contains_disjoint_family_through(host, fam, 0)

    def test_false_when_vertex_uninvolved(self):
        # apex + triangle + isolated vertex: family needs the apex's triangle
        host = SimpleGraph(5, [(0, 1), (1, 2), (0, 2)])
        fam = ForbiddenFamily([complete(3)])
        assert contains_disjoint_family_through(host, fam, 1)
        assert not contains_disjoint_family_through(host, fam, 4)

    def test_agrees_with_unrestricted_search_on_free_parents(self):
        # when host minus the vertex is free, the through check decides
        # containment outright
        rng = random.Random(29)
        fam = ForbiddenFamily([complete(3)])
        hits = 0
        for _ in range(100):
            g = random_graph(rng, 6, p=0.35)
            v = 5
            if not is_free(g.without_vertex(v), fam):
                continue
            got = contains_disjoint_family_through(g, fam, v)
            want = contains_disjoint_family(g, fam) is not None
            assert got == want
            hits += got
        assert hits  # the sample exercises both outcomes
