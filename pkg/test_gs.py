import itertools
import re
import unittest
from fractions import Fraction

from plumb.graph import (AugmentedGraph, Mode, chain_graph, cycle_graph, intersection_matrix,
                         sign_class, validate_graph)
from plumb.gs import (CriterionFails, GSWitness, IsolatedVertexWithoutHalfEdge,
                      NotNonNegative, check_gs, gs_edge_data, nonnegative_witness, require_gs)
from plumb.moves import augmented_toric_blowup
from plumb.policy import distribute, load_policy, toric_blowup_values


TRIANGLE = validate_graph({
    'vertices': [{'id': 'v1', 'genus': 1, 'self_intersection': 1},
                 {'id': 'v2', 'genus': 0, 'self_intersection': -2},
                 {'id': 'v3', 'genus': 2, 'self_intersection': 2}],
    'edges': [['v1', 'v2'], ['v2', 'v3'], ['v3', 'v1']],
})


def necklaces(length, values):
    """One representative per cycle up to rotation and reflection."""
    for seq in itertools.product(values, repeat=length):
        variants = []
        for k in range(length):
            rotated = seq[k:] + seq[:k]
            variants.append(rotated)
            variants.append(tuple(reversed(rotated)))
        if seq == min(variants):
            yield seq


class CheckGSTests(unittest.TestCase):

    def test_example_divisors_are_concave(self):
        for graph in (chain_graph([1]), chain_graph([1, 2]), TRIANGLE, cycle_graph([0, 0])):
            witness = check_gs(graph, Mode.CONCAVE)
            self.assertIsNotNone(witness)
            self.assertTrue(witness.verify(intersection_matrix(graph)))
        self.assertEqual(check_gs(chain_graph([1, 2]), Mode.CONCAVE).a, (2, 3))

    def test_negative_definite_sphere(self):
        graph = chain_graph([-2])
        self.assertIsNone(check_gs(graph, Mode.CONCAVE))
        witness = check_gs(graph, Mode.CONVEX)
        self.assertEqual(witness.z, (Fraction(-1, 2),))
        self.assertEqual(witness.a, (1,))
        self.assertRaises(CriterionFails, require_gs, graph, Mode.CONCAVE)

    def test_positive_divisor_is_not_convex(self):
        self.assertIsNone(check_gs(TRIANGLE, Mode.CONVEX))

    def test_witness_scaling(self):
        q = intersection_matrix(TRIANGLE)
        witness = GSWitness((2, 1, 1), (4, 1, 5), Mode.CONCAVE)
        self.assertTrue(witness.verify(q))
        self.assertTrue(witness.scaled(Fraction(1, 3)).verify(q))
        self.assertFalse(witness.scaled(-1).verify(q))

    def test_nonnegative_cycles_are_concave(self):
        for length in range(2, 6):
            for s_values in necklaces(length, range(-3, 4)):
                graph = cycle_graph(s_values)
                if not sign_class(graph).is_nonnegative:
                    continue
                q = intersection_matrix(graph)
                witness = check_gs(graph, Mode.CONCAVE)
                self.assertIsNotNone(witness, s_values)
                self.assertTrue(witness.verify(q))
                constructed = nonnegative_witness(graph)
                self.assertEqual(tuple(q.apply(constructed.z)), constructed.a)
                self.assertTrue(all(x > 0 for x in constructed.z))
                self.assertTrue(all(x > 0 for x in constructed.a))


class NonNegativeWitnessTests(unittest.TestCase):

    def test_triangle(self):
        witness = nonnegative_witness(TRIANGLE)
        self.assertEqual(witness.z, (2, 1, 1))
        self.assertEqual(witness.a, (4, 1, 5))

    def test_zero_entry_raised_by_neighbour(self):
        witness = nonnegative_witness(cycle_graph([0, -2]))
        self.assertEqual(witness.z, (2, 1))
        self.assertEqual(witness.a, (2, 2))

    def test_breadth_first_order(self):
        # v1 is two steps from the positive entries, the other zeros one
        graph = chain_graph([-1, -2, -1, -2, -2, 0])
        with self.assertLogs('plumb.gs', level='DEBUG') as logs:
            witness = nonnegative_witness(graph)
        reached = [int(m.group(1)) for m in
                   (re.search(r'to reach a\[(\d+)\]', line) for line in logs.output) if m]
        self.assertEqual(reached, [1, 4, 0])
        self.assertEqual(witness.z, (1, Fraction(9, 8), Fraction(3, 2), Fraction(9, 8), 1, 1))
        self.assertEqual(witness.a, (Fraction(1, 8), Fraction(1, 4), Fraction(3, 4),
                                     Fraction(1, 4), Fraction(1, 8), 1))

    def test_already_positive(self):
        witness = nonnegative_witness(cycle_graph([0, 0]))
        self.assertEqual(witness.z, (1, 1))

    def test_rejects_other_classes(self):
        self.assertRaises(NotNonNegative, nonnegative_witness, chain_graph([-2]))
        self.assertRaises(NotNonNegative, nonnegative_witness, cycle_graph([-2, -2]))


class EdgeDataTests(unittest.TestCase):

    def test_floor_distribution(self):
        graph = chain_graph([1, -3, 1])
        data = gs_edge_data(graph, [1, 1, 1])
        self.assertEqual(data.s_dist[('v2', 'e1')], -2)
        self.assertEqual(data.s_dist[('v2', 'e2')], -1)
        self.assertEqual(data.s_dist[('v1', 'e1')], 1)

    def test_x_formula(self):
        z = [Fraction(2), Fraction(1), Fraction(1)]
        data = gs_edge_data(TRIANGLE, z)
        self.assertEqual(data.z_prime, {'v1': -1, 'v2': Fraction(-1, 2), 'v3': Fraction(-1, 2)})
        for (vid, eid), x in data.x.items():
            u, v = TRIANGLE.edge(eid)
            other = v if u == vid else u
            expected = -data.s_dist[(vid, eid)] * data.z_prime[vid] - data.z_prime[other]
            self.assertEqual(x, expected)
        # sums over the edges at a vertex recover s_i
        for vertex in TRIANGLE.vertices:
            total = sum(s for (vid, _), s in data.s_dist.items() if vid == vertex.id)
            self.assertEqual(total, vertex.self_intersection)

    def test_policy_by_name(self):
        floor = gs_edge_data(TRIANGLE, [2, 1, 1], 'floor')
        leading = gs_edge_data(TRIANGLE, [2, 1, 1], load_policy('leading'))
        self.assertEqual(leading.s_dist[('v3', 'e2')], 3)
        self.assertEqual(leading.s_dist[('v3', 'e3')], -1)
        self.assertEqual(floor.s_dist[('v3', 'e2')], 1)
        self.assertEqual(floor.z_prime, leading.z_prime)

    def test_isolated_vertex_needs_half_edge(self):
        graph = chain_graph([1])
        self.assertRaises(IsolatedVertexWithoutHalfEdge, gs_edge_data, graph, [1])
        data = gs_edge_data(graph, [1], half_edges=['v1'])
        self.assertEqual(data.s_dist, {('v1', 'h:v1'): 1})
        self.assertEqual(data.x, {('v1', 'h:v1'): Fraction(1, 2)})

    def test_half_edge_on_connected_vertex(self):
        data = gs_edge_data(chain_graph([1, 2]), [1, 1], half_edges=['v2'])
        self.assertEqual(data.s_dist[('v2', 'h:v2')], 0)
        self.assertEqual(data.x[('v2', 'h:v2')], 0)

    def test_toric_blowup_parameters(self):
        before = AugmentedGraph(TRIANGLE, {'v1': 4, 'v2': 1, 'v3': 5}, {'v1': 2, 'v2': 1, 'v3': 1})
        w = Fraction(1, 2)
        after = augmented_toric_blowup(before, 'e1', w)
        values = distribute(TRIANGLE, load_policy('floor'))
        policy = toric_blowup_values(TRIANGLE, after.graph, values, 'e1')
        data = gs_edge_data(after.graph, after.witness_vector(), policy)
        v0 = after.graph.vertices[-1].id
        self.assertEqual(after.graph.edge('e1'), ('v1', v0))
        self.assertEqual(after.graph.edge('e2'), (v0, 'v2'))
        self.assertEqual(data.s_dist[(v0, 'e1')], 0)
        self.assertEqual(data.s_dist[(v0, 'e2')], -1)
        self.assertEqual(data.s_dist[('v1', 'e1')], values[('v1', 'e1')] - 1)
        self.assertEqual(data.s_dist[('v2', 'e2')], values[('v2', 'e1')] - 1)
        self.assertEqual(data.s_dist[('v2', 'e3')], values[('v2', 'e2')])
        self.assertEqual(data.x[(v0, 'e1')], -data.z_prime['v1'])
        self.assertEqual(data.x[(v0, 'e2')], data.z_prime['v1'] + w / 2)


if __name__ == '__main__':
    unittest.main()
