"""Genome adjacencies, the adjacency graph, and double-cut-and-join moves."""

import random

import pytest

from revdcj.dcj import (
    HEAD,
    TAIL,
    AdjacencySet,
    Extremity,
    adjacency_graph,
    adjacency_graph_to_dot,
    adjacency_set,
    apply_dcj,
    circular_dcj_distance,
    dcj_distance,
    enumerate_dcj_moves,
    genome_from_adjacency_set,
    head,
    tail,
)
from revdcj.oracle import brute_dcj_distance
from revdcj.perm import (
    CIRCULAR,
    LINEAR,
    Chromosome,
    Genome,
    SignedPermutation,
    apply_reversal,
    parse_genome,
)

from conftest import marker_names, random_genome

# a linear+circular genome pair that exercises every component kind
GA = parse_genome("L: b -d c\nC: a -e f")
GB = parse_genome("L: a b c\nC: d e\nL: f")


def genome_of_perm(p: SignedPermutation) -> Genome:
    markers = tuple((str(abs(v)), 1 if v > 0 else -1) for v in p.values)
    return Genome((Chromosome(LINEAR, markers),))


class TestExtremities:
    def test_head_and_tail_helpers(self):
        assert head("x") == Extremity("x", HEAD)
        assert tail("x") == Extremity("x", TAIL)

    def test_breakpoints_list_adjacencies_then_telomeres(self):
        bps = adjacency_set(parse_genome("L: 1 2")).breakpoints()
        assert bps[:1] == (frozenset({head("1"), tail("2")}),)
        assert set(bps[1:]) == {
            frozenset({tail("1")}),
            frozenset({head("2")}),
        }


class TestAdjacencySet:
    def test_extremity_reused_across_breakpoints(self):
        with pytest.raises(ValueError):
            AdjacencySet(
                adjacencies=frozenset({frozenset({head("1"), tail("1")})}),
                telomeres=frozenset({head("1")}),
            )

    def test_marker_missing_one_side(self):
        with pytest.raises(ValueError):
            AdjacencySet(
                adjacencies=frozenset(),
                telomeres=frozenset({head("1")}),
            )

    def test_adjacency_must_pair_two_extremities(self):
        with pytest.raises(ValueError):
            AdjacencySet(
                adjacencies=frozenset({frozenset({head("1")})}),
                telomeres=frozenset({tail("1")}),
            )

    def test_roundtrip_through_breakpoints(self):
        rng = random.Random(13)
        for _ in range(60):
            g = random_genome(marker_names(rng.randint(1, 8)), rng)
            assert genome_from_adjacency_set(adjacency_set(g)) == g

    def test_roundtrip_the_worked_example(self):
        for g in (GA, GB):
            assert genome_from_adjacency_set(adjacency_set(g)) == g


class TestAdjacencyGraph:
    def test_equal_circular_genomes_give_short_cycles(self):
        g = parse_genome("C: 1 2")
        graph = adjacency_graph(g, g)
        assert sorted((c.kind, c.n_edges) for c in graph.components) == [
            ("cycle", 2),
            ("cycle", 2),
        ]
        assert graph.cycles == 2 and graph.odd_paths == 0

    def test_equal_linear_genomes_give_one_edge_paths(self):
        g = parse_genome("L: 1")
        graph = adjacency_graph(g, g)
        assert [(c.kind, c.n_edges) for c in graph.components] == [
            ("path", 1),
            ("path", 1),
        ]
        assert graph.cycles == 0 and graph.odd_paths == 2

    def test_worked_example_components(self):
        graph = adjacency_graph(GA, GB)
        assert sorted((c.kind, c.n_edges) for c in graph.components) == [
            ("path", 1),
            ("path", 2),
            ("path", 9),
        ]
        assert graph.cycles == 0 and graph.odd_paths == 2

    def test_components_partition_the_breakpoint_indices(self):
        graph = adjacency_graph(GA, GB)
        n_a = len(adjacency_set(GA).breakpoints())
        n_b = len(adjacency_set(GB).breakpoints())
        seen_a = [i for comp in graph.components for i in comp.a_members]
        seen_b = [i for comp in graph.components for i in comp.b_members]
        assert sorted(seen_a) == list(range(n_a))
        assert sorted(seen_b) == list(range(n_b))

    def test_marker_sets_must_match(self):
        with pytest.raises(ValueError):
            adjacency_graph(parse_genome("L: 1"), parse_genome("L: 2"))

    def test_odd_path_count_is_always_even(self):
        rng = random.Random(14)
        for _ in range(60):
            names = marker_names(rng.randint(1, 7))
            graph = adjacency_graph(
                random_genome(names, rng), random_genome(names, rng)
            )
            assert graph.odd_paths % 2 == 0

    def test_dot_export_mentions_both_sides(self):
        dot = adjacency_graph_to_dot(adjacency_graph(GA, GB))
        assert dot.startswith("graph")
        assert "a0 [" in dot and "b0 [" in dot and " -- " in dot


class TestDistance:
    def test_identical_genomes_are_at_distance_zero(self):
        rng = random.Random(15)
        for _ in range(20):
            g = random_genome(marker_names(rng.randint(1, 6)), rng)
            assert dcj_distance(g, g) == 0

    def test_worked_example_distance(self):
        assert dcj_distance(GA, GB) == 5

    def test_worked_example_matches_exhaustive_search(self):
        assert brute_dcj_distance(GA, GB).distance == 5

    def test_formula_matches_exhaustive_search_on_random_pairs(self):
        rng = random.Random(16)
        for _ in range(40):
            names = marker_names(rng.randint(1, 4))
            ga, gb = random_genome(names, rng), random_genome(names, rng)
            assert dcj_distance(ga, gb) == brute_dcj_distance(ga, gb).distance

    def test_distance_is_symmetric(self):
        rng = random.Random(17)
        for _ in range(40):
            names = marker_names(rng.randint(1, 6))
            ga, gb = random_genome(names, rng), random_genome(names, rng)
            assert dcj_distance(ga, gb) == dcj_distance(gb, ga)

    def test_zero_distance_means_equality(self):
        rng = random.Random(18)
        for _ in range(60):
            names = marker_names(rng.randint(1, 5))
            ga, gb = random_genome(names, rng), random_genome(names, rng)
            assert (dcj_distance(ga, gb) == 0) == (ga == gb)


class TestCircularDistance:
    CASES = (
        ("C: 1 -2", "C: 1 2"),
        ("C: 1 2 3", "C: 1 3 2"),
        ("C: 1 2", "C: 1 2"),
        ("C: 1 2 3\nC: 4", "C: 1 2\nC: 3 4"),
    )

    def test_agrees_with_the_general_formula(self):
        for a, b in self.CASES:
            ga, gb = parse_genome(a), parse_genome(b)
            assert circular_dcj_distance(ga, gb) == dcj_distance(ga, gb)
            assert circular_dcj_distance(ga, gb) == brute_dcj_distance(ga, gb).distance

    def test_agrees_on_random_circular_pairs(self):
        rng = random.Random(19)
        count = 0
        while count < 25:
            names = marker_names(rng.randint(1, 5))
            ga, gb = random_genome(names, rng), random_genome(names, rng)
            if any(
                ch.shape != CIRCULAR for g in (ga, gb) for ch in g.chromosomes
            ):
                continue
            count += 1
            assert circular_dcj_distance(ga, gb) == dcj_distance(ga, gb)

    def test_rejects_linear_chromosomes(self):
        with pytest.raises(ValueError):
            circular_dcj_distance(parse_genome("L: 1"), parse_genome("C: 1"))


class TestApplyDcj:
    def test_two_cuts_realize_a_reversal(self):
        g = parse_genome("L: 1 2 3")
        out = apply_dcj(g, [head("1"), tail("2")], [head("3")], rejoin=0)
        assert out == parse_genome("L: 1 -3 -2")

    def test_alternate_rejoin_splits_instead(self):
        g = parse_genome("L: 1 2 3")
        out = apply_dcj(g, [head("1"), tail("2")], [head("3")], rejoin=1)
        assert out == parse_genome("L: 1\nC: 2 3")

    def test_single_cut_with_rejoin_zero_restores_the_genome(self):
        g = parse_genome("C: 1 2")
        assert apply_dcj(g, [head("1"), tail("2")], rejoin=0) == g

    def test_single_cut_with_rejoin_one_linearizes(self):
        g = parse_genome("C: 1")
        out = apply_dcj(g, [head("1"), tail("1")], rejoin=1)
        assert out == parse_genome("L: 1")

    def test_excision_of_a_middle_marker(self):
        g = parse_genome("L: 1 2 3")
        out = apply_dcj(g, [head("1"), tail("2")], [head("2"), tail("3")], rejoin=1)
        assert out == parse_genome("L: 1 3\nC: 2")

    def test_cuts_accept_extremity_pairs_as_tuples(self):
        g = parse_genome("L: 1 2 3")
        out = apply_dcj(g, [("1", HEAD), ("2", TAIL)], [("3", HEAD)], rejoin=0)
        assert out == parse_genome("L: 1 -3 -2")

    def test_error_cases(self):
        g = parse_genome("L: 1 2 3")
        cut = [head("1"), tail("2")]
        with pytest.raises(ValueError):
            apply_dcj(g, cut, cut)
        with pytest.raises(ValueError):
            apply_dcj(g, [tail("1")], rejoin=0)  # single cut needs an adjacency
        with pytest.raises(ValueError):
            apply_dcj(g, [head("1"), head("2")])  # not a breakpoint here
        with pytest.raises(ValueError):
            apply_dcj(g, [head("9")])  # unknown telomere
        with pytest.raises(ValueError):
            apply_dcj(g, cut, [head("3")], rejoin=2)


class TestEnumerateMoves:
    def test_two_marker_circle(self):
        moves = enumerate_dcj_moves(parse_genome("C: 1 2"))
        assert parse_genome("C: 1\nC: 2") in moves
        assert parse_genome("C: 1 -2") in moves
        assert parse_genome("L: 1 2") in moves
        assert parse_genome("C: 1 2") not in moves

    def test_single_linear_marker_can_circularize(self):
        moves = enumerate_dcj_moves(parse_genome("L: 1"))
        assert moves == (parse_genome("C: 1"),)

    def test_empty_genome_has_no_moves(self):
        assert enumerate_dcj_moves(Genome(())) == ()

    def test_moves_are_distinct_and_sorted(self):
        moves = enumerate_dcj_moves(GA)
        assert len(set(moves)) == len(moves)
        assert list(moves) == sorted(moves, key=lambda g: g.canonical())

    def test_every_move_is_at_distance_one(self):
        rng = random.Random(20)
        for _ in range(8):
            g = random_genome(marker_names(rng.randint(1, 3)), rng)
            for m in enumerate_dcj_moves(g):
                assert dcj_distance(g, m) == 1

    def test_reversals_are_among_the_moves(self):
        from revdcj.oracle import all_reversals, enumerate_signed_permutations

        rng = random.Random(21)
        perms = list(enumerate_signed_permutations(3))
        for n in (4, 5):
            pool = list(enumerate_signed_permutations(n))
            perms.extend(rng.sample(pool, 5))
        for p in perms:
            g = genome_of_perm(p)
            moves = set(enumerate_dcj_moves(g))
            for interval in all_reversals(p.n):
                q = genome_of_perm(apply_reversal(p, interval))
                if q != g:
                    assert q in moves


class TestReversalAsDcjDistance:
    def test_dcj_distance_never_exceeds_reversal_distance(self):
        from revdcj.oracle import reversal_distance_table

        table = reversal_distance_table(3)
        identity = genome_of_perm(SignedPermutation((1, 2, 3)))
        for values, d in table.items():
            g = genome_of_perm(SignedPermutation(values))
            assert dcj_distance(g, identity) <= d
