"""Maximum-clique enumeration, clique graph, components, counting checks."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquehit import (
    BudgetExceededError,
    Graph,
    SplitMix64,
    check_hajnal,
    check_hajnal_subset,
    check_kostochka,
    clique_graph,
    components,
    gen_blown_up_cycle,
    gen_linked_cliques,
    gen_random,
    hypothesis_met,
    maximum_cliques,
)
from cliquehit._kernel import available_backends
from cliquehit.cliques import assert_universal_in_union

from instances import complete_graph, random_graph, subset_max_cliques


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


class TestMaximumCliques:
    def test_complete_graph(self):
        cs = maximum_cliques(complete_graph(4))
        assert cs.omega == 4 and cs.cliques == ((0, 1, 2, 3),)

    def test_c5_edges(self):
        cs = maximum_cliques(gen_blown_up_cycle(5, 1))
        assert cs.omega == 2 and len(cs.cliques) == 5

    def test_blown_cycle_two(self):
        g = gen_blown_up_cycle(5, 2)
        cs = maximum_cliques(g)
        assert cs.omega == 4 and len(cs.cliques) == 5
        assert cs.cliques == tuple(sorted(subset_max_cliques(g)))

    def test_blown_cycle_omega_and_delta(self):
        for k in range(1, 6):
            g = gen_blown_up_cycle(5, k)
            assert maximum_cliques(g).omega == 2 * k
            assert g.max_degree() == 3 * k - 1

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            maximum_cliques(Graph(0))

    def test_edgeless_graph(self):
        cs = maximum_cliques(Graph(3))
        assert cs.omega == 1 and cs.cliques == ((0,), (1,), (2,))

    def test_canonical_order(self):
        g = Graph(4, [(0, 1), (2, 3)])
        cs = maximum_cliques(g)
        assert cs.cliques == ((0, 1), (2, 3))

    def test_budget_raises(self):
        g = gen_random(30, 0.5, 5)
        with pytest.raises(BudgetExceededError):
            maximum_cliques(g, node_budget=10)

    def test_oracle_equivalence_seeded(self):
        rng = SplitMix64(11)
        for _ in range(50):
            g = random_graph(rng, 1, 13, (0.2, 0.4, 0.6, 0.8))
            assert maximum_cliques(g).cliques == tuple(subset_max_cliques(g))

    @settings(max_examples=60, deadline=None)
    @given(graphs())
    def test_oracle_equivalence_property(self, g):
        assert maximum_cliques(g).cliques == tuple(subset_max_cliques(g))

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=12))
    def test_soundness(self, g):
        cs = maximum_cliques(g)
        for c in cs.cliques:
            assert len(c) == cs.omega
            for i in range(len(c)):
                for j in range(i + 1, len(c)):
                    assert g.has_edge(c[i], c[j])


class TestKernelParity:
    @pytest.mark.skipif(
        "cython" not in available_backends(), reason="compiled kernel not built"
    )
    def test_backends_agree(self):
        impls = available_backends()
        rng = SplitMix64(42)
        for _ in range(30):
            g = random_graph(rng, 1, 40, (0.2, 0.5, 0.8))
            got = {
                name: impl.enumerate_max_cliques(g.n, list(g.masks), 10**7)
                for name, impl in impls.items()
            }
            ref = got["python"]
            assert got["cython"][0] == ref[0]
            assert got["cython"][1] == ref[1]

    @pytest.mark.skipif(
        "cython" not in available_backends(), reason="compiled kernel not built"
    )
    def test_budget_parity(self):
        impls = available_backends()
        g = gen_random(25, 0.6, 3)
        for impl in impls.values():
            with pytest.raises(BudgetExceededError):
                impl.enumerate_max_cliques(g.n, list(g.masks), 20)


class TestCliqueGraph:
    def test_disjoint_triangles(self):
        cs = maximum_cliques(gen_linked_cliques(3, 2, False))
        cg = clique_graph(cs)
        assert cg.n == 2 and cg.m == 0

    def test_blown_cycle_is_c5(self):
        cs = maximum_cliques(gen_blown_up_cycle(5, 2))
        cg = clique_graph(cs)
        assert cg.n == 5 and cg.m == 5
        assert all(cg.degree(v) == 2 for v in range(5))

    def test_k4_minus_edge(self):
        g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        cs = maximum_cliques(g)
        assert cs.cliques == ((0, 1, 2), (0, 1, 3))
        cg = clique_graph(cs)
        assert cg.m == 1


class TestComponents:
    def test_single_component(self):
        g = complete_graph(5)
        cs = maximum_cliques(g)
        comps = components(cs, clique_graph(cs))
        assert len(comps) == 1
        assert comps[0].d_set == comps[0].f_set == frozenset(range(5))

    def test_two_triangles(self):
        cs = maximum_cliques(gen_linked_cliques(3, 2, False))
        comps = components(cs, clique_graph(cs))
        assert len(comps) == 2
        for c in comps:
            assert len(c.d_set) == len(c.f_set) == 3

    def test_blown_cycle_core_empty(self):
        cs = maximum_cliques(gen_blown_up_cycle(5, 2))
        comps = components(cs, clique_graph(cs))
        assert len(comps) == 1 and comps[0].f_set == frozenset()

    def test_f_subset_d_and_clique(self):
        rng = SplitMix64(5)
        for _ in range(30):
            g = random_graph(rng, 1, 18, (0.3, 0.5, 0.7))
            cs = maximum_cliques(g)
            comps = components(cs, clique_graph(cs))
            assert_universal_in_union(g, comps)
            for comp in comps:
                assert comp.f_set <= comp.d_set
                fl = sorted(comp.f_set)
                for i in range(len(fl)):
                    for j in range(i + 1, len(fl)):
                        assert g.has_edge(fl[i], fl[j])

    def test_mismatched_inputs_rejected(self):
        cs = maximum_cliques(complete_graph(3))
        with pytest.raises(ValueError):
            components(cs, Graph(2, []))


class TestHajnal:
    def test_single_k5(self):
        g = complete_graph(5)
        cs = maximum_cliques(g)
        comp = components(cs, clique_graph(cs))[0]
        rep = check_hajnal(comp, cs)
        assert (rep.lhs, rep.rhs, rep.holds) == (10, 10, True)

    def test_k4_minus_edge(self):
        g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        cs = maximum_cliques(g)
        comp = components(cs, clique_graph(cs))[0]
        rep = check_hajnal(comp, cs)
        assert (rep.lhs, rep.rhs, rep.holds) == (6, 6, True)

    def test_subset_requires_index(self):
        cs = maximum_cliques(complete_graph(3))
        with pytest.raises(ValueError):
            check_hajnal_subset(cs, [])

    def test_property_components_and_subcollections(self):
        rng = SplitMix64(1001)
        for _ in range(60):
            g = random_graph(rng, 1, 22, (0.3, 0.5, 0.7))
            cs = maximum_cliques(g)
            comps = components(cs, clique_graph(cs))
            for comp in comps:
                assert check_hajnal(comp, cs).holds
                idx = list(comp.clique_indices)
                for _ in range(3):
                    take = [i for i in idx if rng.below(2)]
                    if take:
                        assert check_hajnal_subset(cs, take).holds
            # arbitrary collections across components also satisfy it
            all_idx = range(len(cs.cliques))
            take = [i for i in all_idx if rng.below(2)]
            if take:
                assert check_hajnal_subset(cs, take).holds


class TestKostochka:
    def test_k5_equality(self):
        g = complete_graph(5)
        cs = maximum_cliques(g)
        comps = components(cs, clique_graph(cs))
        (rep,) = check_kostochka(g, cs, comps)
        assert rep.bound == 5 and rep.f_size == 5 and rep.holds and rep.hypothesis_met

    def test_linked_cliques(self):
        g = gen_linked_cliques(4, 2, True)
        cs = maximum_cliques(g)
        comps = components(cs, clique_graph(cs))
        reps = check_kostochka(g, cs, comps)
        assert len(reps) == 2
        for rep in reps:
            assert rep.bound == 3 and rep.f_size == 4 and rep.holds
            assert rep.hypothesis_met

    def test_blown_cycle_is_sharp(self):
        g = gen_blown_up_cycle(5, 2)
        cs = maximum_cliques(g)
        comps = components(cs, clique_graph(cs))
        (rep,) = check_kostochka(g, cs, comps)
        assert not rep.hypothesis_met
        assert rep.f_size == 0 and rep.bound == 2 and not rep.holds

    def test_property_under_hypothesis(self):
        rng = SplitMix64(77)
        checked = 0
        for _ in range(400):
            g = random_graph(rng, 3, 12, (0.7, 0.85, 0.95))
            cs = maximum_cliques(g)
            if not hypothesis_met(cs.omega, g.max_degree()):
                continue
            comps = components(cs, clique_graph(cs))
            for rep in check_kostochka(g, cs, comps):
                assert rep.holds
            checked += 1
        assert checked >= 30


def test_hypothesis_met_is_exact():
    # 3*omega == 2*(delta+1) must fail the strict inequality.
    assert not hypothesis_met(4, 5)
    assert hypothesis_met(4, 4)
    assert not hypothesis_met(2, 2)
