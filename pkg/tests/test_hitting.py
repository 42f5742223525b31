"""Pipeline, oracle, verifier, and cap selection."""

import pytest

from cliquehit import (
    BudgetExceededError,
    Graph,
    SplitMix64,
    brute_force_hitting,
    choose_k,
    clique_graph,
    components,
    gen_blown_up_cycle,
    gen_linked_cliques,
    gen_random,
    hitting_stable_set,
    hypothesis_met,
    maximum_cliques,
    verify_hitting,
)
from cliquehit.hitting import (
    FOUND_UNDER_HYPOTHESIS,
    FOUND_WITHOUT_HYPOTHESIS,
    NONE_EXISTS_PROVEN,
    UNKNOWN,
)

from instances import complete_graph, random_graph


def comps_of(g):
    cs = maximum_cliques(g)
    return cs, components(cs, clique_graph(cs))


class TestChooseK:
    def test_two_disjoint_k4(self):
        g = gen_linked_cliques(4, 2, True)
        cs, comps = comps_of(g)
        assert choose_k(comps, g) == 1

    def test_single_component(self):
        g = complete_graph(6)
        cs, comps = comps_of(g)
        assert choose_k(comps, g) == 1

    def test_empty_core_gives_none(self):
        g = gen_blown_up_cycle(5, 2)
        cs, comps = comps_of(g)
        assert choose_k(comps, g) is None

    def test_needs_components(self):
        with pytest.raises(ValueError):
            choose_k([], complete_graph(2))


class TestVerifyHitting:
    def test_c5_two_set_misses(self):
        g = gen_blown_up_cycle(5, 1)
        check = verify_hitting(g, {0, 2})
        assert not check.ok and check.stable and check.missed_cliques

    def test_k4_single_vertex(self):
        check = verify_hitting(complete_graph(4), {0})
        assert check.ok

    def test_non_stable_reports_edge(self):
        g = complete_graph(3)
        check = verify_hitting(g, {0, 1})
        assert not check.ok and check.internal_edge == (0, 1)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            verify_hitting(complete_graph(3), {7})


class TestBruteForce:
    def test_c5_none(self):
        assert brute_force_hitting(gen_blown_up_cycle(5, 1)) is None

    def test_blown_cycle_two_none(self):
        assert brute_force_hitting(gen_blown_up_cycle(5, 2)) is None

    def test_two_triangles(self):
        g = gen_linked_cliques(3, 2, False)
        s = brute_force_hitting(g)
        assert s is not None and len(s) == 2
        assert verify_hitting(g, s).ok

    def test_size_guard(self):
        with pytest.raises(BudgetExceededError):
            brute_force_hitting(gen_random(25, 0.3, 1), limit=20)

    def test_finds_minimum_size(self):
        g = complete_graph(5)
        assert len(brute_force_hitting(g)) == 1


class TestPipeline:
    def test_complete_graphs(self):
        for n in (1, 2, 3, 7):
            rep = hitting_stable_set(complete_graph(n))
            assert rep.status == FOUND_UNDER_HYPOTHESIS
            assert len(rep.stable_set) == 1

    def test_linked_cliques_found(self):
        g = gen_linked_cliques(4, 2, True)
        rep = hitting_stable_set(g)
        assert rep.status == FOUND_UNDER_HYPOTHESIS
        assert rep.omega == 4 and rep.delta == 4 and rep.hypothesis_met
        assert len(rep.stable_set) == 2
        assert verify_hitting(g, rep.stable_set).ok
        assert brute_force_hitting(g) is not None

    def test_blown_cycle_proven_none(self):
        rep = hitting_stable_set(gen_blown_up_cycle(5, 2))
        assert rep.status == NONE_EXISTS_PROVEN
        assert not rep.hypothesis_met

    def test_tightness_small(self):
        for k in (1, 2):
            g = gen_blown_up_cycle(5, k)
            rep = hitting_stable_set(g)
            assert rep.omega == 2 * k and rep.delta == 3 * k - 1
            assert 3 * rep.omega == 2 * (rep.delta + 1)
            assert not rep.hypothesis_met
            assert rep.status == NONE_EXISTS_PROVEN

    def test_hypothesis_false_core_route(self):
        # path on three vertices: cores work although the hypothesis fails
        rep = hitting_stable_set(Graph(3, [(0, 1), (1, 2)]))
        assert rep.status == FOUND_WITHOUT_HYPOTHESIS
        assert rep.stable_set == frozenset({1}) and rep.chosen_k == 1

    def test_c4_without_hypothesis(self):
        rep = hitting_stable_set(gen_linked_cliques(2, 2, True))
        assert not rep.hypothesis_met
        assert rep.status == FOUND_WITHOUT_HYPOTHESIS
        assert verify_hitting(gen_linked_cliques(2, 2, True), rep.stable_set).ok

    def test_unknown_beyond_brute_limit(self):
        g = gen_blown_up_cycle(5, 5)  # n = 25, hypothesis exactly fails
        rep = hitting_stable_set(g, brute_limit=20)
        assert rep.status == UNKNOWN
        assert "exceeds" in rep.reason

    def test_unknown_on_clique_budget(self):
        g = gen_random(30, 0.5, 12)
        rep = hitting_stable_set(g, clique_budget=10)
        assert rep.status == UNKNOWN and "budget" in rep.reason
        assert rep.omega is None

    def test_k_override_used_when_valid(self):
        g = gen_linked_cliques(4, 2, True)
        rep = hitting_stable_set(g, k_override=2)
        assert rep.chosen_k == 2 and rep.status == FOUND_UNDER_HYPOTHESIS

    def test_k_override_ignored_when_invalid(self):
        g = gen_linked_cliques(4, 2, True)
        rep = hitting_stable_set(g, k_override=4)  # caps fail, falls back to scan
        assert rep.chosen_k == 1

    def test_k_override_validation(self):
        with pytest.raises(ValueError):
            hitting_stable_set(complete_graph(3), k_override=0)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            hitting_stable_set(Graph(0))

    def test_report_json_shape(self):
        rep = hitting_stable_set(gen_linked_cliques(4, 2, True))
        doc = rep.to_json()
        assert doc["schema_version"] == 1
        assert doc["status"] == FOUND_UNDER_HYPOTHESIS
        assert doc["stable_set"] and min(doc["stable_set"]) >= 1
        assert doc["proof_checks"]["all_hold"] is True


class TestEndToEndProperties:
    def test_hypothesis_instances_always_found(self):
        rng = SplitMix64(20240)
        done = 0
        for _ in range(400):
            g = random_graph(rng, 3, 12, (0.7, 0.85, 0.95))
            cs = maximum_cliques(g)
            if not hypothesis_met(cs.omega, g.max_degree()):
                continue
            rep = hitting_stable_set(g)
            assert rep.status == FOUND_UNDER_HYPOTHESIS
            assert verify_hitting(g, rep.stable_set, cs).ok
            assert rep.proof_checks is not None and rep.proof_checks.all_hold
            done += 1
        assert done >= 30

    def test_agreement_with_oracle(self):
        rng = SplitMix64(20241)
        for _ in range(80):
            g = random_graph(rng, 1, 13, (0.3, 0.5, 0.8))
            rep = hitting_stable_set(g)
            oracle = brute_force_hitting(g)
            if rep.status in (FOUND_UNDER_HYPOTHESIS, FOUND_WITHOUT_HYPOTHESIS):
                assert oracle is not None
            elif rep.status == NONE_EXISTS_PROVEN:
                assert oracle is None
                assert not rep.hypothesis_met  # a hypothesis-met None is impossible
