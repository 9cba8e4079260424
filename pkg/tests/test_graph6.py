"""Round-trip and reference-vector tests for the graph6 codec."""

import random

import pytest

from turanlab import (
    Graph6ParseError,
    SimpleGraph,
    complete,
    cycle,
    decode_graph6,
    encode_graph6,
    path,
    read_graph6_lines,
    write_graph6_lines,
)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    return SimpleGraph(n, edges)


# reference tokens from the format's published examples
KNOWN = [
    (complete(3), "Bw"),
    (SimpleGraph(5, [(0, 2), (0, 4), (1, 3), (3, 4)]), "DQc"),
]


class TestEncode:
    def test_known_vectors(self):
        for g, token in KNOWN:
            assert encode_graph6(g) == token

    def test_empty_graph(self):
        assert encode_graph6(SimpleGraph(0)) == "?"
        assert decode_graph6("?").n == 0

    def test_roundtrip_random(self):
        rng = random.Random(3)
        for _ in range(200):
            g = random_graph(rng, rng.randint(0, 12))
            assert decode_graph6(encode_graph6(g)) == g

    def test_roundtrip_large_order(self):
        # orders above 62 switch to the long length prefix
        g = path(80)
        assert decode_graph6(encode_graph6(g)) == g


class TestDecode:
    def test_rejects_bad_characters(self):
        with pytest.raises(Graph6ParseError):
            decode_graph6("B\x19")

    def test_rejects_truncated_body(self):
        with pytest.raises(Graph6ParseError):
            decode_graph6("D")

    def test_rejects_trailing_garbage_bits(self):
        token = encode_graph6(cycle(5))
        with pytest.raises(Graph6ParseError):
            decode_graph6(token + "www")


class TestLines:
    def test_write_then_read(self):
        graphs = [complete(3), cycle(4), path(2)]
        text = write_graph6_lines(graphs)
        assert text.endswith("\n")
        assert read_graph6_lines(text) == graphs

    def test_blank_lines_ignored(self):
        text = "\nBw\n\nCr\n"
        assert len(read_graph6_lines(text)) == 2
