import json

import pytest

from vertexnim import (
    ConstructionError,
    ConstructionSoundnessError,
    Graph,
    MoveRule,
    NodeBudgetExceeded,
    Position,
    Witness,
    WitnessSizeCapError,
    certify,
    complete_graph,
    construct_next,
    cycle_graph,
    grundy_value,
    iter_bits,
    max_feasible_k,
    path_graph,
    tower_size,
    witness,
    witness_record,
)


class TestBaseWitnesses:
    def test_value_0_is_3_path(self):
        w = witness(0)
        assert w.graph == path_graph(3)
        assert w.k == 0 and w.certified
        assert w.recipe is None

    def test_value_1_is_single_edge(self):
        w = witness(1)
        assert w.graph == complete_graph(2)
        assert w.k == 1 and w.certified


class TestConstructNext:
    def test_two_parts_no_padding(self):
        w = construct_next([path_graph(3), complete_graph(2)])
        assert w.graph.n == 7
        assert w.graph.edge_count() == 8
        assert not w.recipe.padding_used
        assert w.recipe.index_set() == (0, 1)
        assert not w.certified
        assert certify(w).certified
        assert grundy_value(w.graph) == 2

    def test_single_part_gets_padding(self):
        w = construct_next([path_graph(3)])
        assert w.graph.n == 8
        assert w.recipe.padding_used
        assert w.recipe.index_set() == (-1, 0)
        assert grundy_value(w.graph) == 1

    def test_apex_degrees_are_odd(self):
        w = construct_next([path_graph(3), complete_graph(2)])
        apexes = list(iter_bits(w.recipe.apex_set()))
        assert apexes == [5, 6]
        for apex in apexes:
            assert w.graph.degree(apex) == 3

    def test_original_vertices_have_even_degree(self):
        w = construct_next([path_graph(3), complete_graph(2), witness(2).graph])
        for v in range(w.graph.n - len(w.recipe.parts)):
            assert w.graph.degree(v) % 2 == 0

    def test_only_apexes_movable_at_root(self):
        w = construct_next([path_graph(3), complete_graph(2)])
        movable = w.graph.full_position().movable_vertices(MoveRule.ODD)
        assert movable == w.recipe.apex_set()

    def test_all_even_part_rejected(self):
        with pytest.raises(ConstructionError, match="no odd-degree vertex"):
            construct_next([cycle_graph(4), complete_graph(2)])

    def test_disconnected_part_rejected(self):
        with pytest.raises(ConstructionError, match="connected"):
            construct_next([Graph(4, [(0, 1), (2, 3)])])

    def test_empty_part_rejected(self):
        with pytest.raises(ConstructionError, match="connected and nonempty"):
            construct_next([Graph(0)])

    def test_no_parts_rejected(self):
        with pytest.raises(ConstructionError, match="at least one part"):
            construct_next([])

    def test_non_graph_rejected(self):
        with pytest.raises(ConstructionError, match="not a Graph"):
            construct_next(["nope"])

    def test_verify_parts_catches_wrong_order(self):
        with pytest.raises(ConstructionError, match="Grundy value"):
            construct_next(
                [complete_graph(2), path_graph(3)], verify_parts=True
            )

    def test_verify_parts_accepts_correct_order(self):
        w = construct_next([path_graph(3), complete_graph(2)], verify_parts=True)
        assert w.k == 2


class TestWitnessTower:
    def test_deterministic_layout(self):
        w = witness(2)
        assert w.graph.edges() == [
            (0, 1),
            (0, 5),
            (1, 2),
            (2, 5),
            (3, 4),
            (3, 6),
            (4, 6),
            (5, 6),
        ]

    def test_tower_sizes(self):
        assert [tower_size(k) for k in range(5)] == [3, 2, 7, 19, 35]

    def test_values_up_to_4(self):
        for k in range(5):
            w = witness(k)
            assert w.certified
            assert w.k == k
            assert w.graph.is_connected()

    def test_child_identities(self):
        w = witness(3)
        full = (1 << w.graph.n) - 1
        for part in w.recipe.parts:
            apex = w.recipe.apex_vertex(part.index)
            child = Position(w.graph, full ^ (1 << apex))
            assert grundy_value(child) == part.claimed_grundy

    def test_padding_alternates(self):
        assert witness(2).recipe.padding_used is False
        assert witness(3).recipe.padding_used is True
        assert witness(4).recipe.padding_used is False

    def test_negative_k(self):
        with pytest.raises(ValueError, match="nonnegative"):
            witness(-1)

    def test_size_cap(self):
        assert max_feasible_k() == 4
        for k in (5, 30):
            with pytest.raises(WitnessSizeCapError) as info:
                witness(k)
            assert info.value.max_feasible == 4

    def test_budget_too_small(self):
        with pytest.raises(NodeBudgetExceeded):
            witness(4, node_budget=10)


class TestCertify:
    def test_mismatch_raises_soundness_error(self):
        fake = Witness(5, path_graph(3), None, certified=False)
        with pytest.raises(ConstructionSoundnessError) as info:
            certify(fake)
        assert info.value.got == 0

    def test_certify_is_pure(self):
        w = construct_next([path_graph(3), complete_graph(2)])
        certified = certify(w)
        assert not w.certified and certified.certified
        assert certified.graph is w.graph


class TestRecipe:
    def test_part_offsets(self):
        recipe = witness(3).recipe
        # padding 3-path, then the tower parts, then the apexes
        assert recipe.part_offset(-1) == 0
        assert recipe.part_offset(0) == 3
        assert recipe.part_offset(1) == 6
        assert recipe.part_offset(2) == 8
        assert [recipe.apex_vertex(i) for i in (-1, 0, 1, 2)] == [15, 16, 17, 18]

    def test_unknown_part(self):
        with pytest.raises(KeyError):
            witness(2).recipe.part_offset(9)

    def test_claimed_values(self):
        recipe = witness(4).recipe
        assert [(p.index, p.claimed_grundy) for p in recipe.parts] == [
            (0, 0),
            (1, 1),
            (2, 2),
            (3, 3),
        ]

    def test_validate_rejects_odd_part_count(self):
        recipe = witness(2).recipe
        broken = type(recipe)(
            k=recipe.k,
            parts=recipe.parts[:1],
            padding_used=recipe.padding_used,
            apex_edges=recipe.apex_edges,
            clique_edges=recipe.clique_edges,
        )
        with pytest.raises(ConstructionError, match="even number of parts"):
            broken.validate()


class TestWitnessRecord:
    def test_base_record(self):
        record = witness_record(witness(1))
        assert record["base_case"]
        assert record["vertices"] == 2
        json.dumps(record)

    def test_tower_record(self):
        record = witness_record(witness(2))
        assert record["vertices"] == 7 and record["edges"] == 8
        assert record["padding_used"] is False
        assert [p["index"] for p in record["parts"]] == [0, 1]
        assert [p["offset"] for p in record["parts"]] == [0, 3]
        assert [a["vertex"] for a in record["apexes"]] == [5, 6]
        assert [a["attached"] for a in record["apexes"]] == [[0, 2], [3, 4]]
        assert record["clique_edges"] == [[5, 6]]
        json.dumps(record)
