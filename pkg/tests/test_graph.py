from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nestcond import generators as gen
from nestcond.graph import (
    Edge,
    Graph,
    GraphError,
    GraphMorphism,
    are_isomorphic,
    compose,
    find_isomorphism,
    identity,
    inverse,
    is_bijective,
    is_injective,
    is_jointly_epic,
    is_surjective,
    iter_injective,
    validate_graph,
    validate_morphism,
)

from oracles import all_graphs, all_morphisms, image_union_covers, injective_dup_scan, isomorphic_bruteforce, key
from strategies import graphs, rngs

EDGE = Graph.of(["1", "2"], [("e", "1", "2", "b")])


class TestValidateGraph:
    def test_empty_graph_ok(self):
        assert validate_graph(Graph()).ok

    def test_dangling_edge(self):
        g = Graph.of(["1"], [("e", "1", "9", "b")])
        rep = validate_graph(g)
        assert not rep.ok
        assert any("dangling edge" in p for p in rep.problems)

    def test_duplicate_edge_id(self):
        g = Graph.of(["1"], [("e", "1", "1", "b"), ("e", "1", "1", "c")])
        assert any("duplicate edge id" in p for p in validate_graph(g).problems)

    def test_duplicate_node_id(self):
        g = Graph(("1", "1"))
        assert any("duplicate node id" in p for p in validate_graph(g).problems)

    def test_label_for_unknown_node(self):
        g = Graph.of(["1"], node_labels={"2": "x"})
        assert not validate_graph(g).ok

    def test_edges_accept_dicts(self):
        g = Graph.of(["1"], [{"id": "e", "src": "1", "tgt": "1", "label": "b"}])
        assert g.edge("e") == Edge("e", "1", "1", "b")


class TestValidateMorphism:
    def test_identity_ok(self):
        assert validate_morphism(identity(EDGE)).ok

    def test_label_not_preserved(self):
        cod = Graph.of(["1", "2"], [("f", "1", "2", "c")])
        m = GraphMorphism(EDGE, cod, {"1": "1", "2": "2"}, {"e": "f"})
        assert any("label not preserved" in p for p in validate_morphism(m).problems)

    def test_partial_map(self):
        m = GraphMorphism(EDGE, EDGE, {"1": "1"}, {"e": "e"})
        assert any("partial map" in p for p in validate_morphism(m).problems)

    def test_source_not_preserved(self):
        cod = Graph.of(["1", "2"], [("f", "2", "1", "b")])
        m = GraphMorphism(EDGE, cod, {"1": "1", "2": "2"}, {"e": "f"})
        assert any("source not preserved" in p for p in validate_morphism(m).problems)

    def test_image_outside_codomain(self):
        m = GraphMorphism(Graph.of(["1"]), Graph.of(["1"]), {"1": "7"}, {})
        assert any("outside codomain" in p for p in validate_morphism(m).problems)

    def test_node_labels_compared_exactly(self):
        g = Graph.of(["1"], node_labels={"1": "x"})
        h = Graph.of(["1"])
        assert not validate_morphism(GraphMorphism(g, h, {"1": "1"}, {})).ok


class TestCompose:
    def test_identity_left(self):
        f = GraphMorphism(Graph.of(["a"]), EDGE, {"a": "2"}, {})
        assert compose(identity(f.dom), f) == f
        assert compose(f, identity(f.cod)) == f

    def test_pointwise_hand_computed(self):
        one = Graph.of(["x"])
        two = Graph.of(["a", "b"])
        three = Graph.of(["p", "q", "r"])
        f = GraphMorphism(one, two, {"x": "b"}, {})
        g = GraphMorphism(two, three, {"a": "p", "b": "r"}, {})
        h = compose(f, g)
        assert h.dom == one and h.cod == three
        assert h.node_map == {"x": "r"}

    def test_injective_composite(self):
        f = GraphMorphism.inclusion(Graph.of(["1"]), EDGE)
        assert is_injective(compose(f, identity(EDGE)))

    def test_domain_mismatch(self):
        with pytest.raises(GraphError):
            compose(identity(EDGE), identity(Graph()))


class TestIdentity:
    def test_empty(self):
        m = identity(Graph())
        assert m.node_map == {} and m.edge_map == {}

    def test_injective(self):
        assert is_injective(identity(EDGE))

    def test_idempotent(self):
        assert compose(identity(EDGE), identity(EDGE)) == identity(EDGE)


class TestInjectivity:
    def test_collapse(self):
        m = GraphMorphism(Graph.of(["1", "2"]), Graph.of(["x"]), {"1": "x", "2": "x"}, {})
        assert not is_injective(m)

    def test_bijection_inverse(self):
        g = Graph.of(["1", "2"], [("e", "1", "2", "b")])
        h = Graph.of(["a", "b"], [("f", "b", "a", "b")])
        m = find_isomorphism(g, h)
        assert is_bijective(m)
        assert compose(m, inverse(m)) == identity(g)

    def test_inverse_needs_bijection(self):
        with pytest.raises(GraphError):
            inverse(GraphMorphism.inclusion(Graph(), EDGE))

    @given(rngs)
    def test_agrees_with_duplicate_scan(self, rng):
        g = gen.random_graph(rng, max_nodes=5)
        m = gen.random_morphism(rng, g)
        assert is_injective(m) == injective_dup_scan(m)


class TestJointlyEpic:
    def test_pushout_legs(self):
        from nestcond.category import pushout

        f = GraphMorphism.inclusion(Graph.of(["1"]), EDGE)
        po = pushout(f, f)
        assert is_jointly_epic(po.left, po.right)

    def test_from_empty(self):
        e = GraphMorphism.inclusion(Graph(), EDGE)
        assert not is_jointly_epic(e, e)

    def test_codomain_mismatch(self):
        with pytest.raises(GraphError):
            is_jointly_epic(identity(EDGE), identity(Graph()))

    @given(rngs)
    def test_agrees_with_image_union(self, rng):
        x = gen.random_graph(rng, max_nodes=4)
        f = gen.random_map_into(rng, x)
        g = gen.random_map_into(rng, x, prefix="z")
        assert is_jointly_epic(f, g) == image_union_covers(f, g)


class TestIsomorphism:
    def test_self(self):
        assert find_isomorphism(EDGE, EDGE) is not None

    def test_different_sizes(self):
        assert find_isomorphism(EDGE, Graph.of(["1"])) is None

    def test_result_is_valid_bijection(self):
        g = Graph.of(["1", "2", "3"], [("e", "1", "2", "b"), ("f", "2", "3", "c"), ("l", "3", "3", "b")])
        h = Graph.of(["z", "y", "x"], [("1", "z", "z", "b"), ("2", "y", "z", "c"), ("3", "x", "y", "b")])
        m = find_isomorphism(g, h)
        assert m is not None
        assert validate_morphism(m).ok and is_injective(m) and is_surjective(m)

    def test_parallel_edge_multiplicity(self):
        g = Graph.of(["1", "2"], [("e", "1", "2", "b"), ("f", "1", "2", "b")])
        h = Graph.of(["1", "2"], [("e", "1", "2", "b"), ("f", "2", "1", "b")])
        assert not are_isomorphic(g, h)

    def test_exhaustive_small(self):
        # every pair of iso classes with at most 3 nodes and 2 edges
        reps = all_graphs(3, 2)
        for i, g in enumerate(reps):
            for h in reps[i:]:
                assert are_isomorphic(g, h) == isomorphic_bruteforce(g, h) == (g is h)

    @given(graphs(max_nodes=4, max_edges=4), st.randoms(use_true_random=False))
    def test_shuffled_copy_is_isomorphic(self, g, rng):
        perm = list(g.nodes)
        rng.shuffle(perm)
        names = {n: f"m{perm.index(n)}" for n in g.nodes}
        h = Graph.of(names.values(), [(f"x{e.id}", names[e.src], names[e.tgt], e.label) for e in g.edges])
        assert are_isomorphic(g, h)
        assert isomorphic_bruteforce(g, h)

    @given(graphs(max_nodes=4, max_edges=4), graphs(max_nodes=4, max_edges=4, prefix="m"))
    def test_agrees_with_bijection_enumeration(self, g, h):
        assert are_isomorphic(g, h) == isomorphic_bruteforce(g, h)

    @given(graphs(max_nodes=4, max_edges=4), graphs(max_nodes=4, max_edges=4, prefix="m"))
    def test_symmetric(self, g, h):
        assert are_isomorphic(g, h) == are_isomorphic(h, g)


class TestIterInjective:
    @given(graphs(max_nodes=3, max_edges=3), graphs(max_nodes=4, max_edges=4, prefix="m"))
    def test_complete_and_sound(self, g, h):
        found = {key(GraphMorphism(g, h, nm, em)) for nm, em in iter_injective(g, h)}
        expected = {key(m) for m in all_morphisms(g, h) if injective_dup_scan(m)}
        assert found == expected

    def test_fixed_nodes_respected(self):
        h = Graph.of(["a", "b", "c"])
        found = list(iter_injective(Graph.of(["1", "2"]), h, fixed_nodes={"1": "c"}))
        assert {nm["1"] for nm, _ in found} == {"c"}
        assert len(found) == 2

    def test_deterministic_order(self):
        h = Graph.of(["a", "b", "c"])
        first = [nm for nm, _ in iter_injective(Graph.of(["1"]), h)]
        assert first == [{"1": "a"}, {"1": "b"}, {"1": "c"}]


class TestCategoryLaws:
    @given(rngs)
    def test_associative(self, rng):
        f, g, h = gen.composable_triple(rng)
        assert compose(compose(f, g), h) == compose(f, compose(g, h))

    @given(rngs)
    def test_unital(self, rng):
        f, _, _ = gen.composable_triple(rng)
        assert compose(identity(f.dom), f) == f == compose(f, identity(f.cod))

    @given(rngs)
    def test_m_closed_under_composition(self, rng):
        f, g, _ = gen.composable_triple(rng)
        if is_injective(f) and is_injective(g):
            assert is_injective(compose(f, g))

    @given(rngs)
    def test_m_closed_under_decomposition(self, rng):
        f, g, _ = gen.composable_triple(rng)
        if is_injective(compose(f, g)):
            assert is_injective(f)


def test_random_generators_are_seeded():
    a = gen.composable_triple(random.Random(5))
    b = gen.composable_triple(random.Random(5))
    assert a == b
