from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from chromatic.exceptions import GraphError
from chromatic.models import Mode
from chromatic.sgraph import (
    NEGATIVE,
    POSITIVE,
    SignedGraph,
    canonical_key,
    components,
    contract_edge,
    contraction_vertex,
    delete_edge,
    delete_vertex,
    halfedge,
    induced_delete,
    is_antibalanced,
    is_balanced,
    link,
    loop,
    loose,
    negate,
    relabel,
    strip_halfedges,
    switch,
    to_networkx,
)

TRIANGLE = SignedGraph.build(
    3, [("link", 0, 1, POSITIVE), ("link", 0, 2, NEGATIVE), ("link", 1, 2, NEGATIVE)]
)
HALFEDGE_PATH = SignedGraph.build(
    3, [("link", 0, 1, NEGATIVE), ("link", 1, 2, POSITIVE), ("halfedge", 2)]
)


@st.composite
def signed_graphs(draw, max_vertices=4, max_edges=5):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    vertex = st.integers(min_value=0, max_value=n - 1)
    sign = st.sampled_from([POSITIVE, NEGATIVE])
    edges = []
    for _ in range(draw(st.integers(min_value=0, max_value=max_edges))):
        kind = draw(st.sampled_from(["link", "loop", "halfedge"] if n > 1 else ["loop", "halfedge"]))
        if kind == "link":
            v, w = draw(st.lists(vertex, min_size=2, max_size=2, unique=True))
            edges.append(("link", v, w, draw(sign)))
        elif kind == "loop":
            edges.append(("loop", draw(vertex), draw(sign)))
        else:
            edges.append(("halfedge", draw(vertex)))
    return SignedGraph.build(n, edges)


def switchings(graph):
    return st.fixed_dictionaries({v: st.sampled_from([POSITIVE, NEGATIVE]) for v in graph.vertices})


class EdgeTests(SimpleTestCase):
    def test_link_needs_distinct_ends(self):
        with self.assertRaises(GraphError):
            link(0, 1, 1, POSITIVE)

    def test_loop_needs_sign(self):
        with self.assertRaises(GraphError):
            loop(0, 1, None)

    def test_halfedge_and_loose_carry_no_sign(self):
        self.assertIsNone(halfedge(0, 2).sign)
        self.assertIsNone(loose(3).sign)
        self.assertTrue(loose(3).is_loose)

    def test_edge_kinds(self):
        self.assertTrue(loop(0, 0, POSITIVE).is_positive_loop)
        self.assertTrue(loop(0, 0, NEGATIVE).is_negative_loop)
        self.assertFalse(link(0, 0, 1).is_loop)


class SignedGraphTests(SimpleTestCase):
    def test_build_assigns_ids_and_labels(self):
        self.assertEqual([e.id for e in HALFEDGE_PATH.edges], [0, 1, 2])
        self.assertEqual(HALFEDGE_PATH.labels, ("1", "2", "3"))
        self.assertEqual(HALFEDGE_PATH.order, 3)
        self.assertEqual(HALFEDGE_PATH.size, 3)

    def test_unknown_edge_id(self):
        with self.assertRaises(GraphError):
            TRIANGLE.edge(7)
        with self.assertRaises(GraphError):
            delete_edge(TRIANGLE, 7)

    def test_edge_to_missing_vertex(self):
        with self.assertRaises(GraphError):
            SignedGraph((0, 1), (link(0, 0, 5),))

    def test_describe_uses_file_syntax(self):
        self.assertEqual(
            HALFEDGE_PATH.describe(),
            "signed\nvertices 3\nedge 1 2 -\nedge 2 3 +\nhalfedge 3",
        )

    def test_is_simple(self):
        self.assertTrue(TRIANGLE.is_simple)
        doubled = SignedGraph.build(2, [("link", 0, 1, POSITIVE), ("link", 1, 0, NEGATIVE)])
        self.assertFalse(doubled.is_simple)
        self.assertFalse(HALFEDGE_PATH.is_link_only)


class DeletionTests(SimpleTestCase):
    def test_delete_vertex_drops_incident_edges(self):
        smaller = delete_vertex(HALFEDGE_PATH, 2)
        self.assertEqual(smaller.vertices, (0, 1))
        self.assertEqual([e.id for e in smaller.edges], [0])
        self.assertEqual(smaller.labels, ("1", "2"))

    def test_delete_vertex_keeps_loose_edges(self):
        graph = SignedGraph((0, 1), (link(0, 0, 1), loose(1)))
        self.assertTrue(delete_vertex(graph, 0).has_loose_edge)

    def test_induced_delete_rejects_foreign_vertices(self):
        with self.assertRaises(GraphError):
            induced_delete(TRIANGLE, {0, 9})
        self.assertEqual(induced_delete(TRIANGLE, {0, 2}).vertices, (1,))

    def test_input_is_untouched(self):
        delete_vertex(TRIANGLE, 0)
        contract_edge(TRIANGLE, 0)
        self.assertEqual(TRIANGLE.size, 3)


class ContractionTests(SimpleTestCase):
    def test_positive_link_merges_into_smaller_vertex(self):
        contracted = contract_edge(TRIANGLE, 0)
        self.assertEqual(contracted.vertices, (0, 2))
        self.assertEqual(
            sorted((e.ends, e.sign) for e in contracted.edges),
            [((0, 2), NEGATIVE), ((0, 2), NEGATIVE)],
        )
        self.assertEqual(contraction_vertex(TRIANGLE, 0), 0)

    def test_negative_link_switches_far_vertex(self):
        contracted = contract_edge(HALFEDGE_PATH, 0)
        self.assertEqual(contracted.vertices, (0, 2))
        moved = contracted.edge(1)
        self.assertEqual((moved.ends, moved.sign), ((0, 2), NEGATIVE))
        self.assertTrue(contracted.edge(2).is_halfedge)

    def test_parallel_link_becomes_loop(self):
        digon = SignedGraph.build(2, [("link", 0, 1, POSITIVE), ("link", 0, 1, NEGATIVE)])
        for edge_id in (0, 1):
            contracted = contract_edge(digon, edge_id)
            (left,) = contracted.edges
            self.assertTrue(left.is_negative_loop)
            self.assertEqual(left.ends, (0,))

    def test_halfedge_contraction_leaves_halfedges(self):
        contracted = contract_edge(HALFEDGE_PATH, 2)
        self.assertEqual(contracted.vertices, (0, 1))
        self.assertTrue(contracted.edge(0).is_link)
        self.assertTrue(contracted.edge(1).is_halfedge)
        self.assertEqual(contracted.edge(1).ends, (1,))

    def test_negative_loop_contraction_makes_loose_edges(self):
        graph = SignedGraph.build(1, [("loop", 0, NEGATIVE), ("loop", 0, POSITIVE), ("halfedge", 0)])
        contracted = contract_edge(graph, 0)
        self.assertEqual(contracted.vertices, ())
        self.assertTrue(all(e.is_loose for e in contracted.edges))
        self.assertEqual(contracted.size, 2)

    def test_positive_loop_contraction_is_deletion(self):
        graph = SignedGraph.build(1, [("loop", 0, POSITIVE)])
        self.assertEqual(contract_edge(graph, 0), delete_edge(graph, 0))

    def test_loose_edge_cannot_be_contracted(self):
        graph = SignedGraph((0,), (loose(0),))
        with self.assertRaises(GraphError):
            contract_edge(graph, 0)
        with self.assertRaises(GraphError):
            contraction_vertex(graph, 0)


class SwitchingTests(SimpleTestCase):
    def test_partial_switching_rejected(self):
        with self.assertRaises(GraphError):
            switch(TRIANGLE, {0: NEGATIVE, 1: POSITIVE})

    def test_bad_value_rejected(self):
        with self.assertRaises(GraphError):
            switch(TRIANGLE, {0: 2, 1: 1, 2: 1})

    def test_switch_changes_links_only(self):
        graph = SignedGraph.build(2, [("link", 0, 1, POSITIVE), ("loop", 0, NEGATIVE), ("halfedge", 1)])
        switched = switch(graph, {0: NEGATIVE, 1: POSITIVE})
        self.assertEqual(switched.edge(0).sign, NEGATIVE)
        self.assertEqual(switched.edge(1).sign, NEGATIVE)
        self.assertTrue(switched.edge(2).is_halfedge)

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_switching_twice_is_identity(self, data):
        graph = data.draw(signed_graphs())
        switching = data.draw(switchings(graph))
        self.assertEqual(switch(switch(graph, switching), switching), graph)

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_balance_is_switching_invariant(self, data):
        graph = data.draw(signed_graphs())
        switching = data.draw(switchings(graph))
        self.assertEqual(is_balanced(switch(graph, switching)), is_balanced(graph))


class BalanceTests(SimpleTestCase):
    def test_triangle_with_two_negative_edges_is_balanced(self):
        self.assertTrue(is_balanced(TRIANGLE))

    def test_triangle_with_one_negative_edge_is_antibalanced_only(self):
        graph = SignedGraph.build(
            3, [("link", 0, 1, NEGATIVE), ("link", 1, 2, POSITIVE), ("link", 0, 2, POSITIVE)]
        )
        self.assertFalse(is_balanced(graph))
        self.assertTrue(is_antibalanced(graph))

    def test_all_negative_triangle_is_antibalanced(self):
        graph = SignedGraph.build(3, [("link", 0, 1, NEGATIVE), ("link", 1, 2, NEGATIVE), ("link", 0, 2, NEGATIVE)])
        self.assertFalse(is_balanced(graph))
        self.assertTrue(is_antibalanced(graph))
        self.assertTrue(is_balanced(negate(graph)))

    def test_halfedges_and_negative_loops_unbalance(self):
        self.assertFalse(is_balanced(HALFEDGE_PATH))
        self.assertFalse(is_antibalanced(HALFEDGE_PATH))
        self.assertTrue(is_balanced(strip_halfedges(HALFEDGE_PATH)))
        self.assertFalse(is_balanced(SignedGraph.build(1, [("loop", 0, NEGATIVE)])))
        self.assertTrue(is_balanced(SignedGraph.build(1, [("loop", 0, POSITIVE)])))

    def test_edgeless_graph_is_balanced(self):
        self.assertTrue(is_balanced(SignedGraph.build(0)))
        self.assertTrue(is_antibalanced(SignedGraph.build(3)))


class StructureTests(SimpleTestCase):
    def test_components_keep_isolated_vertices(self):
        graph = SignedGraph.build(3, [("link", 0, 1, NEGATIVE), ("halfedge", 2)])
        parts = components(graph)
        self.assertEqual([p.vertices for p in parts], [(0, 1), (2,)])
        self.assertTrue(parts[1].edges[0].is_halfedge)

    def test_to_networkx_records_halfedges(self):
        multigraph = to_networkx(HALFEDGE_PATH)
        self.assertEqual(multigraph.number_of_edges(), 2)
        self.assertEqual(multigraph.nodes[2]["halfedges"], 1)
        self.assertEqual(multigraph.edges[0, 1, 0]["sign"], NEGATIVE)

    def test_canonical_key_ignores_edge_ids(self):
        renumbered = SignedGraph(
            (0, 1, 2),
            (halfedge(9, 2), link(4, 1, 2, POSITIVE), link(5, 0, 1, NEGATIVE)),
        )
        self.assertEqual(canonical_key(renumbered), canonical_key(HALFEDGE_PATH))
        self.assertNotEqual(canonical_key(negate(HALFEDGE_PATH)), canonical_key(HALFEDGE_PATH))

    def test_canonical_key_depends_on_mode(self):
        unsigned = SignedGraph.build(2, [("link", 0, 1, POSITIVE)], Mode.UNSIGNED)
        signed = SignedGraph.build(2, [("link", 0, 1, POSITIVE)])
        self.assertNotEqual(canonical_key(unsigned), canonical_key(signed))

    def test_relabel_moves_labels_with_vertices(self):
        moved = relabel(HALFEDGE_PATH, {0: 2, 1: 1, 2: 0})
        self.assertEqual(moved.labels, ("3", "2", "1"))
        self.assertEqual(moved.edge(2).ends, (0,))
        with self.assertRaises(GraphError):
            relabel(HALFEDGE_PATH, {0: 0, 1: 0, 2: 1})
