import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from vertexnim import (
    Graph,
    GraphFormatError,
    complete_graph,
    from_graph6,
    load_graph,
    parse_graph,
    path_graph,
    serialize_graph,
    to_graph6,
)


class TestParseGraph:
    def test_path(self):
        assert parse_graph("3 2\n0 1\n1 2") == path_graph(3)

    def test_single_vertex(self):
        assert parse_graph("1 0") == Graph(1)

    def test_empty_graph(self):
        assert parse_graph("0 0") == Graph(0)

    def test_comments_and_blanks(self):
        text = "# a path\n\n3 2\n0 1\n# middle\n\n1 2\n"
        assert parse_graph(text) == path_graph(3)

    def test_self_loop_names_line(self):
        with pytest.raises(GraphFormatError, match="line 2: self-loop"):
            parse_graph("2 1\n0 0")

    def test_duplicate_edge_names_line(self):
        with pytest.raises(GraphFormatError, match="line 3: duplicate"):
            parse_graph("2 2\n0 1\n1 0")

    def test_vertex_out_of_range_names_line(self):
        with pytest.raises(GraphFormatError, match="line 2: vertex out of range"):
            parse_graph("2 1\n0 2")

    def test_malformed_header(self):
        with pytest.raises(GraphFormatError, match="line 1: expected header"):
            parse_graph("banana")

    def test_non_numeric_edge(self):
        with pytest.raises(GraphFormatError, match="line 2: expected edge"):
            parse_graph("2 1\na b")

    def test_missing_edges(self):
        with pytest.raises(GraphFormatError, match="declares 2 edges, found 1"):
            parse_graph("3 2\n0 1")

    def test_extra_edges(self):
        with pytest.raises(GraphFormatError, match="line 3: more than"):
            parse_graph("3 1\n0 1\n1 2")

    def test_empty_input(self):
        with pytest.raises(GraphFormatError, match="empty input"):
            parse_graph("   \n# nothing\n")


@given(graphs(max_n=8))
def test_edge_list_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


class TestGraph6:
    # K3 and K4 are standard fixtures for the encoding
    def test_known_strings(self):
        assert to_graph6(complete_graph(3)) == "Bw"
        assert to_graph6(complete_graph(4)) == "C~"
        assert to_graph6(path_graph(4)) == "Ch"
        assert to_graph6(Graph(1)) == "@"
        assert to_graph6(Graph(0)) == "?"

    def test_decode_known_strings(self):
        assert from_graph6("Bw") == complete_graph(3)
        assert from_graph6("Ch") == path_graph(4)

    def test_header_tolerated(self):
        assert from_graph6(">>graph6<<Bw") == complete_graph(3)

    def test_sparse6_rejected(self):
        with pytest.raises(GraphFormatError, match="sparse6"):
            from_graph6(":Fa@x^")

    def test_digraph6_rejected(self):
        with pytest.raises(GraphFormatError, match="digraph6"):
            from_graph6("&B\\o")

    def test_bad_character(self):
        with pytest.raises(GraphFormatError, match="invalid graph6 character"):
            from_graph6("B w")

    def test_wrong_length(self):
        with pytest.raises(GraphFormatError, match="expected"):
            from_graph6("Bww")

    def test_nonzero_padding(self):
        # n=3 has 3 slot bits; the low 3 bits of the body must be zero
        with pytest.raises(GraphFormatError, match="padding"):
            from_graph6("B" + chr(63 + 0b000111))

    def test_empty(self):
        with pytest.raises(GraphFormatError, match="empty"):
            from_graph6("   ")

    def test_long_form_round_trip(self):
        g = path_graph(70)
        encoded = to_graph6(g)
        assert encoded.startswith("~")
        assert from_graph6(encoded) == g

    @given(graphs(max_n=8))
    def test_round_trip(self, g):
        assert from_graph6(to_graph6(g)) == g


class TestGraph6Interop:
    def test_matches_reference_encoder(self):
        nx = pytest.importorskip("networkx")
        import random

        rng = random.Random(0)
        for _ in range(100):
            n = rng.randint(0, 12)
            mask = rng.randrange(1 << (n * (n - 1) // 2)) if n > 1 else 0
            from vertexnim import from_edge_mask

            g = from_edge_mask(n, mask)
            ref_graph = nx.Graph()
            ref_graph.add_nodes_from(range(n))
            ref_graph.add_edges_from(g.edges())
            ref = nx.to_graph6_bytes(ref_graph, header=False).decode().strip()
            assert to_graph6(g) == ref
            assert from_graph6(ref) == g


class TestLoadGraph:
    def test_sniffs_edge_list(self):
        assert load_graph("3 2\n0 1\n1 2") == path_graph(3)

    def test_sniffs_graph6(self):
        assert load_graph("Bw\n") == complete_graph(3)

    def test_sniffs_graph6_after_comment(self):
        assert load_graph("# comment\nCh\n") == path_graph(4)

    def test_empty(self):
        with pytest.raises(GraphFormatError):
            load_graph("")
