"""Canonical certificate and isomorphism tests."""

import random

from turanlab import (
    SimpleGraph,
    certificate,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    is_isomorphic,
    path,
    turan,
    wheel,
)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    return SimpleGraph(n, edges)


class TestCertificate:
    def test_invariant_under_relabeling(self):
        rng = random.Random(5)
        for _ in range(100):
            n = rng.randint(1, 9)
            g = random_graph(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            assert certificate(g.relabel(perm)) == certificate(g)

    def test_separates_same_degree_sequence(self):
        # both 2-regular on 6 vertices
        assert certificate(cycle(6)) != certificate(
            disjoint_union([complete(3), complete(3)])
        )
        # both 3-regular on 6 vertices: K_{3,3} vs the prism
        prism = SimpleGraph(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
        )
        assert certificate(complete_multipartite([3, 3])) != certificate(prism)

    def test_distinct_orders_distinct(self):
        assert certificate(SimpleGraph(3)) != certificate(SimpleGraph(4))


class TestIsIsomorphic:
    def test_positive_pairs(self):
        assert is_isomorphic(turan(6, 3), complete_multipartite([2, 2, 2]))
        assert is_isomorphic(wheel(4), complete(4))
        g = cycle(7)
        assert is_isomorphic(g, g.relabel([3, 5, 0, 6, 1, 4, 2]))

    def test_negative_pairs(self):
        assert not is_isomorphic(path(4), cycle(4))
        assert not is_isomorphic(cycle(6), disjoint_union([complete(3), complete(3)]))

    def test_random_relabelings(self):
        rng = random.Random(17)
        for _ in range(50):
            n = rng.randint(1, 8)
            g = random_graph(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            assert is_isomorphic(g, g.relabel(perm))

    def test_edge_flip_breaks_isomorphism(self):
        g = path(5)
        h = g.without_edge(0, 1).with_edge(0, 2)
        # rewiring one endpoint changes the degree sequence
        assert not is_isomorphic(g, h)
