import random

import pytest
from hypothesis import given, settings, strategies as st

from hyperchrome.hypercore import Hypergraph
from hyperchrome import coloring as col
from hyperchrome import connectivity as conn
from hyperchrome import constructions as cons


class TestGenerators:
    def test_complete_and_cycle(self):
        assert cons.complete_graph(4).m == 6
        assert cons.cycle(5).m == 5
        with pytest.raises(ValueError):
            cons.cycle(2)

    def test_odd_wheel(self):
        w = cons.odd_wheel(5)
        assert (w.n, w.m) == (6, 10)
        with pytest.raises(ValueError):
            cons.odd_wheel(4)

    def test_hyperwheel(self):
        h = cons.hyperwheel(4)
        assert (h.n, h.m) == (5, 5)
        assert (0, 1, 2, 3) in h.edges

    def test_dirac_sum_chi_additive(self):
        g = cons.dirac_sum(cons.cycle(5), cons.complete_graph(2))
        assert col.chromatic_number(g) == 3 + 2

    def test_kc(self):
        assert cons.kc(1, 1) == cons.complete_graph(4)
        assert cons.kc(2, 1) == cons.complete_graph(5)
        g = cons.kc(1, 2)
        assert (g.n, g.m) == (6, 10)

    def test_c2_tree_validation(self):
        with pytest.raises(ValueError, match="root"):
            cons.c2_tree([0, -1, -1])
        with pytest.raises(ValueError, match="parity"):
            cons.c2_tree([-1, 0, 0, 1])  # leaves at depths 1 and 2
        with pytest.raises(ValueError, match="degree"):
            cons.c2_tree([-1, 0, 1, 1])
        with pytest.raises(ValueError, match="tree"):
            cons.c2_tree([-1, 2, 1, 0])

    def test_c2_tree_structure(self):
        g = cons.c2_tree([-1, 0, 0, 1, 1, 2, 2])
        assert g.n == 7
        assert (3, 4, 5, 6) in g.edges
        assert g.m == 7

    def test_figure3(self):
        g = cons.figure3()
        assert (g.n, g.m) == (10, 10)
        assert (4, 5, 6, 7, 8, 9) in g.edges

    def test_toft_sizes(self):
        t1 = cons.toft_graph(1)
        assert (t1.n, t1.m) == (12, 21)
        t2 = cons.toft_graph(2)
        assert (t2.n, t2.m) == (20, 45)
        assert t1.m == t1.n**2 // 16 + t1.n


class TestHajosJoin:
    def test_figure1_both_variants(self):
        for include in (True, False):
            j = cons.figure1_join(include)
            assert (j.graph.n, j.graph.m) == (7, 11)
            assert (j.vstar in j.estar) == include

    def test_join_keeps_operand_ids(self):
        k4 = cons.complete_graph(4)
        j = cons.hajos_join(cons.HajosJoinSpec(k4, k4, 0, 0, 0, 0, False))
        assert j.g1_map == (0, 1, 2, 3)
        assert j.g2_map == (0, 4, 5, 6)

    def test_join_criticality_both_ways(self):
        w5 = cons.odd_wheel(5)
        k4 = cons.complete_graph(4)
        j = cons.hajos_join(cons.HajosJoinSpec(w5, k4, 1, 2, w5.edge_ref((1, 2)), k4.edge_ref((2, 3)), False))
        assert col.is_critical(j.graph, 4).is_critical

    def test_invalid_vertex_edge_pairing(self):
        k4 = cons.complete_graph(4)
        with pytest.raises(ValueError, match="v1 must lie"):
            cons.HajosJoinSpec(k4, k4, 3, 0, k4.edge_ref((0, 1)), 0, False)

    def test_mixed_decompose_round_trip(self):
        for include in (True, False):
            j = cons.figure1_join(include)
            estar_ref = j.graph.edge_ref(j.estar)
            dec = cons.hajos_decompose_mixed(j.graph, j.vstar, estar_ref)
            assert cons.replay_mixed(dec) == j.graph

    def test_mixed_decompose_rejects_non_separator(self):
        with pytest.raises(ValueError, match="not a mixed separating set"):
            cons.hajos_decompose_mixed(cons.complete_graph(4), 0, 5)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10_000))
    def test_random_join_round_trips(self, seed):
        rng = random.Random(seed)
        bases = [cons.odd_wheel(5), cons.complete_graph(4), cons.odd_wheel(7)]
        g1, g2 = rng.choice(bases), rng.choice(bases)
        e1 = rng.randrange(g1.m)
        e2 = rng.randrange(g2.m)
        v1 = rng.choice(g1.edge(e1))
        v2 = rng.choice(g2.edge(e2))
        include = rng.random() < 0.5
        try:
            j = cons.hajos_join(cons.HajosJoinSpec(g1, g2, v1, v2, e1, e2, include))
        except ValueError:
            return  # duplicate merged edge: legitimately refused
        estar_ref = j.graph.edge_ref(j.estar)
        dec = cons.hajos_decompose_mixed(j.graph, j.vstar, estar_ref)
        assert cons.replay_mixed(dec) == j.graph


class TestSplitting:
    def test_split_spec_validation(self):
        g1 = cons.complete_graph(4)
        g2 = cons.complete_graph(4)
        with pytest.raises(ValueError, match="cover exactly"):
            cons.SplitSpec(g1, 0, g2, 0, {0: (0,)})
        full = {ref: (0,) for ref in g2.incident(0)}
        with pytest.raises(ValueError, match="cover the target"):
            cons.SplitSpec(g1, 0, g2, 0, full)

    def test_simple_split_of_k4_into_k4(self):
        # replace vertex 0 of one K4 by the edge {0,1} of another
        g1 = cons.complete_graph(4)
        g2 = cons.complete_graph(4)
        refs = g2.incident(0)
        s = {refs[0]: (0,), refs[1]: (1,), refs[2]: (0, 1)}
        res = cons.split(cons.SplitSpec(g1, g1.edge_ref((0, 1)), g2, 0, s))
        assert res.graph.n == 7
        assert res.g2_map == (-1, 4, 5, 6)

    def test_figure2_g1_from_g2(self):
        assert cons.figure2_g1() == cons.split_vertex(
            cons.figure2_g2(),
            8,
            2,
            {
                cons.figure2_g2().edge_ref(e): (0 if e in {(0, 8), (1, 8), (5, 8)} else 1,)
                for e in [(0, 8), (1, 8), (5, 8), (4, 8), (3, 8), (7, 8)]
            },
        ).graph

    def test_figure2_graphs_are_4_critical(self):
        assert col.is_critical(cons.figure2_g1(), 4).is_critical
        assert col.is_critical(cons.figure2_g2(), 4).is_critical
        assert conn.enumerate_separating_sets(cons.figure2_g1(), 2)

    def test_validate_split_low_k3(self):
        # split edge (1,2) of W5 into the low vertex 0 of a K4
        w5 = cons.odd_wheel(5)
        k4 = cons.complete_graph(4)
        refs = k4.incident(0)
        s = {refs[0]: (1,), refs[1]: (2,), refs[2]: (1, 2)}
        res = cons.validate_split_low(
            cons.SplitSpec(w5, w5.edge_ref((1, 2)), k4, 0, s), k=3
        )
        assert col.is_critical(res.graph, 4).is_critical

    def test_validate_split_low_rejects_high_vertex(self):
        w5 = cons.odd_wheel(5)
        refs = w5.incident(5)  # hub: degree 5 > 3
        s = {r: (0,) for r in refs[:-1]} | {refs[-1]: (1,)}
        with pytest.raises(ValueError, match="low vertex"):
            cons.validate_split_low(
                cons.SplitSpec(w5, w5.edge_ref((0, 1)), w5, 5, s), k=3
            )

    def test_validate_split_ordinary(self):
        k4 = cons.complete_graph(4)
        refs = k4.incident(0)
        s = {refs[0]: (0,), refs[1]: (1,), refs[2]: (0, 1)}
        report = cons.validate_split_ordinary(
            cons.SplitSpec(k4, k4.edge_ref((0, 1)), k4, 0, s), k=3
        )
        if report.theorem_applies:
            assert report.is_critical and report.pair_separates

    def test_general_split_precondition_on_k4(self):
        k4 = cons.complete_graph(4)
        refs = k4.incident(0)
        s = {refs[0]: (0,), refs[1]: (1,), refs[2]: (0, 1)}
        spec = cons.SplitSpec(k4, k4.edge_ref((0, 1)), k4, 0, s)
        assert cons.check_general_split_precondition(spec, k=3)


class TestDecompositions:
    def test_vertex_pair_on_figure2_g1(self):
        g = cons.figure2_g1()
        dec = cons.decompose_vertex_pair(g, 3)
        assert dec is not None
        assert col.is_critical(dec.g1_prime, 4).is_critical
        assert col.is_critical(dec.g2_prime, 4).is_critical

    def test_vertex_pair_none_without_separator(self):
        assert cons.decompose_vertex_pair(cons.complete_graph(4), 3) is None

    def test_vertex_pair_rejects_non_critical(self):
        with pytest.raises(ValueError, match="critical"):
            cons.decompose_vertex_pair(cons.cycle(6), 3)

    def test_edge_cut_on_w5(self):
        w5 = cons.odd_wheel(5)
        cut = conn.minimal_separating_edge_sets(w5, 3)[0]
        dec = cons.decompose_edge_cut(w5, 3, cut.f)
        assert col.is_critical(dec.g2, 4).is_critical
        if dec.g1 is not None:
            assert col.is_critical(dec.g1, 4).is_critical

    def test_edge_cut_rejects_non_minimal(self):
        w5 = cons.odd_wheel(5)
        with pytest.raises(ValueError):
            cons.decompose_edge_cut(w5, 3, (0, 1, 2, 3))

    def test_identify_vertices(self):
        g = Hypergraph.of(4, [(0, 1), (1, 2, 3), (0, 3)])
        merged = cons.identify_vertices(g, 0, 3)
        assert merged.n == 3
        assert (0, 1) in merged.edges


class TestUniversalVertex:
    def test_k4_vertices_are_universal_at_small_bound(self):
        verdict = cons.is_universal_vertex_bounded(cons.complete_graph(4), 0, 3, 2)
        assert verdict.universal_up_to_bound

    def test_figure2_x_is_not_universal(self):
        # vertex 8 of the 9-vertex graph splits into a pair whose
        # 2-colored preset cannot extend (that is the point of the pair)
        verdict = cons.is_universal_vertex_bounded(cons.figure2_g2(), 8, 3, 2)
        assert not verdict.universal_up_to_bound
        assert verdict.counterexample is not None
