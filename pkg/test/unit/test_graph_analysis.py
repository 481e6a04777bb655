import random
from gyro_cayley.algebra.gyrogroup import build_gyrogroup
from gyro_cayley.algebra.permutation import Permutation
from gyro_cayley.algebra.subgyro import left_cosets
from gyro_cayley.builtins import BUILTIN_NAMES, load_builtin
from gyro_cayley.graph.cayley_graph import DiGraph, build_lcay, build_rcay
from gyro_cayley.graph.graph_analysis import (components_equal_partition,
                                              find_automorphism,
                                              is_automorphism, is_cycle,
                                              is_perfect_matching,
                                              is_vertex_transitive,
                                              num_edges, translation_map,
                                              vertex_colors)
from gyro_cayley.util.errors import DomainError
from unittest import TestCase


class TestAutomorphisms(TestCase):
    def test_same_vertex(self):
        graph = build_lcay(load_builtin('g8'), [1, 2, 3])
        self.assertTrue(find_automorphism(graph, 5, 5) is not None)
        perm = find_automorphism(build_lcay(load_builtin('g8'), []), 3, 3)
        self.assertTrue(perm.is_identity())

    def test_g16_complete_graphs(self):
        g16 = load_builtin('g16')
        graph = build_lcay(g16, [1, 2, 3])
        perm = find_automorphism(graph, 1, 7)
        self.assertIsNotNone(perm)
        self.assertEqual(perm(1), 7)
        self.assertTrue(is_automorphism(graph, perm))
        right6 = translation_map(g16, 6, 'R')
        self.assertEqual(right6(1), 7)
        self.assertTrue(is_automorphism(graph, right6))

    def test_g8_not_transitive(self):
        graph = build_lcay(load_builtin('g8'), [1, 2, 3])
        misses = [(u, v) for u in range(8) for v in range(8)
                  if find_automorphism(graph, u, v) is None]
        self.assertTrue(len(misses) > 0)

    def test_symmetric_search(self):
        for graph in [build_lcay(load_builtin('g8'), [1, 2, 3]),
                      build_rcay(load_builtin('g16'), [8])]:
            for u in range(graph.n):
                for v in range(graph.n):
                    there = find_automorphism(graph, u, v) is not None
                    back = find_automorphism(graph, v, u) is not None
                    self.assertEqual(there, back)

    def test_bad_vertex(self):
        graph = build_lcay(load_builtin('g8'), [1, 3])
        with self.assertRaises(DomainError):
            find_automorphism(graph, 0, 8)

    def test_right_translation_fails_on_g8(self):
        g8 = load_builtin('g8')
        graph = build_lcay(g8, [1, 3])
        right1 = translation_map(g8, 1, 'R')
        verdict = is_automorphism(graph, right1)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, (1, 5))
        self.assertTrue(graph.has_arc(4, 5))
        self.assertEqual((right1(4), right1(5)), (2, 4))
        self.assertFalse(graph.has_arc(2, 4))

    def test_left_translation_on_g16(self):
        g16 = load_builtin('g16')
        graph = build_rcay(g16, [8, 9, 10, 11])
        left15 = translation_map(g16, 15, 'L')
        self.assertTrue(is_automorphism(graph, left15))
        self.assertEqual(left15(5), 8)
        self.assertEqual(left15(15), 0)
        self.assertEqual(left15(4), 9)
        self.assertEqual(find_automorphism(graph, 15, 0)(15), 0)

    def test_translation_side(self):
        with self.assertRaises(DomainError):
            translation_map(load_builtin('g8'), 1, 'X')


class TestTransitivity(TestCase):
    def test_g8_figures(self):
        g8 = load_builtin('g8')
        self.assertTrue(is_vertex_transitive(build_lcay(g8, [1, 3])))
        verdict = is_vertex_transitive(build_lcay(g8, [1, 2, 3]))
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness[0], 0)

    def test_g16_figures(self):
        g16 = load_builtin('g16')
        self.assertTrue(is_vertex_transitive(build_lcay(g16, [1, 2, 3])))
        self.assertTrue(is_vertex_transitive(build_rcay(g16, [8, 9])))
        self.assertTrue(is_vertex_transitive(
            build_rcay(g16, [8, 9, 10, 11])))

    def test_edgeless(self):
        self.assertTrue(is_vertex_transitive(DiGraph.from_arcs(5, [])))
        self.assertTrue(is_vertex_transitive(DiGraph.from_arcs(0, [])))

    def test_relabeling_invariance(self):
        rng = random.Random(7)
        graphs = [build_lcay(load_builtin('g8'), [1, 3]),
                  build_lcay(load_builtin('g8'), [1, 2, 3]),
                  build_rcay(load_builtin('g16'), [8])]
        for graph in graphs:
            expected = is_vertex_transitive(graph).holds
            for _ in range(3):
                images = list(range(graph.n))
                rng.shuffle(images)
                moved = graph.relabel(Permutation(images))
                self.assertEqual(is_vertex_transitive(moved).holds, expected)

    def test_transitive_graphs_are_regular(self):
        g16 = load_builtin('g16')
        for gens in [[8], [1, 8], [8, 9], [1, 2, 3], [8, 9, 10, 11]]:
            graph = build_rcay(g16, gens)
            if is_vertex_transitive(graph):
                colors = vertex_colors(graph)
                self.assertEqual(len(set(colors)), 1)


class TestStructure(TestCase):
    def test_order2_matchings(self):
        for name in BUILTIN_NAMES:
            group = load_builtin(name)
            for s in group.elements():
                if s == group.identity or group.neg(s) != s:
                    continue
                graph = build_lcay(group, [s])
                self.assertTrue(is_perfect_matching(graph))
                self.assertEqual(num_edges(graph), group.order // 2)
                self.assertTrue(is_vertex_transitive(graph))

    def test_matching_negatives(self):
        self.assertFalse(is_perfect_matching(
            build_lcay(load_builtin('g8'), [1, 3])))
        self.assertFalse(is_perfect_matching(DiGraph.from_arcs(4, [])))
        self.assertFalse(is_perfect_matching(DiGraph.from_arcs(0, [])))

    def test_cycle(self):
        self.assertTrue(is_cycle(build_lcay(load_builtin('g8'), [1, 3])))
        self.assertFalse(is_cycle(build_lcay(load_builtin('g16'),
                                             [1, 2, 3])))
        self.assertFalse(is_cycle(DiGraph.from_arcs(2, [(0, 1), (1, 0)])))

    def test_identity_not_at_zero(self):
        # Z4 relabeled so that 2 is the identity and 0, 3 are the generators
        table = [[1, 3, 0, 2], [3, 2, 1, 0], [0, 1, 2, 3], [2, 0, 3, 1]]
        group = build_gyrogroup(table)
        self.assertEqual(group.identity, 2)
        graph = build_lcay(group, [0, 3])
        self.assertTrue(is_cycle(graph))
        self.assertTrue(is_vertex_transitive(graph))
        matching = build_lcay(group, [1])
        self.assertTrue(is_perfect_matching(matching))
        self.assertTrue(components_equal_partition(
            matching, left_cosets(group, {2, 1})))
        self.assertEqual(left_cosets(group, {2, 1}).index, 2)
        with self.assertRaises(DomainError):
            build_lcay(group, [2])

    def test_components_are_cosets(self):
        g16 = load_builtin('g16')
        self.assertTrue(components_equal_partition(
            build_rcay(g16, [8, 9]), left_cosets(g16, {0, 1, 8, 9})))
        self.assertTrue(components_equal_partition(
            build_rcay(g16, [8, 9, 10, 11]),
            left_cosets(g16, {0, 1, 2, 3, 8, 9, 10, 11})))
        parts = left_cosets(g16, {0, 1})
        self.assertEqual(parts.index, 8)
        self.assertEqual(parts.sorted_blocks(),
                         [(2 * k, 2 * k + 1) for k in range(8)])
        self.assertTrue(components_equal_partition(build_rcay(g16, [1]),
                                                   parts))

    def test_partition_size_mismatch(self):
        graph = build_rcay(load_builtin('g16'), [8, 9])
        with self.assertRaises(DomainError):
            components_equal_partition(graph, [(0, 1, 8, 9)])
