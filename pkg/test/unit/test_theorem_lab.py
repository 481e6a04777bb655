from itertools import combinations
from gyro_cayley.builtins import load_builtin
from gyro_cayley.graph.cayley_graph import (GyrConditionMode, build_rcay,
                                            check_gyr_condition,
                                            is_undirected)
from gyro_cayley.gyro_manager import GyroManager
from gyro_cayley.theorem.theorem_lab import (BICONDITIONAL, SearchConfig,
                                             TheoremId, TheoremReport,
                                             check_all, check_theorem,
                                             count_candidates,
                                             search_counterexamples)
from gyro_cayley.util.errors import DomainError
from unittest import TestCase


def _by_id(reports):
    return {rep.theorem_id: rep for rep in reports}


class TestReport(TestCase):
    def test_consistency_rules(self):
        rep = TheoremReport(TheoremId.L_TRANSITIVE, (1,), False, True)
        self.assertTrue(rep.consistent)
        self.assertTrue(rep.converse_failure)
        rep = TheoremReport(TheoremId.L_TRANSITIVE, (1,), True, False)
        self.assertFalse(rep.consistent)
        rep = TheoremReport(TheoremId.L_UNDIRECTED, (1,), False, True, True)
        self.assertFalse(rep.consistent)
        rep = TheoremReport(TheoremId.L_CONNECTED, (1,), None, False, True)
        self.assertTrue(rep.consistent)

    def test_unknown_theorem(self):
        with self.assertRaises(DomainError):
            check_theorem(load_builtin('g8'), [1], 'NOT_A_THEOREM')
        self.assertEqual(TheoremId.parse('l_transitive'),
                         TheoremId.L_TRANSITIVE)

    def test_aux_only_for_cosets(self):
        with self.assertRaises(DomainError):
            check_theorem(load_builtin('g16'), [8, 9], 'L_UNDIRECTED',
                          aux=[0, 1, 8, 9])


class TestCheckTheorem(TestCase):
    def test_l_transitive_g16(self):
        rep = check_theorem(load_builtin('g16'), [1, 2, 3],
                            TheoremId.L_TRANSITIVE)
        self.assertTrue(rep.hypothesis)
        self.assertTrue(rep.conclusion)
        self.assertTrue(rep.consistent)
        self.assertEqual(rep.witness['right_translation_failures'], [])

    def test_l_transitive_converse_g8(self):
        rep = check_theorem(load_builtin('g8'), [1, 3],
                            TheoremId.L_TRANSITIVE)
        self.assertFalse(rep.hypothesis)
        self.assertTrue(rep.conclusion)
        self.assertTrue(rep.consistent)
        self.assertTrue(rep.converse_failure)
        self.assertEqual(rep.witness['nonidentity_gyration'], (1, 3))

    def test_components_cosets_g16(self):
        rep = check_theorem(load_builtin('g16'), [8, 9],
                            TheoremId.COMPONENTS_COSETS)
        self.assertTrue(rep.hypothesis)
        self.assertTrue(rep.conclusion)
        self.assertEqual(rep.witness['H'], [0, 1, 8, 9])
        self.assertEqual(len(rep.witness['components']), 4)
        self.assertTrue(rep.witness['l_subgyrogroup'])

    def test_components_cosets_with_aux(self):
        g16 = load_builtin('g16')
        rep = check_theorem(g16, [8, 9], 'COMPONENTS_COSETS',
                            aux=[0, 1, 2, 3, 8, 9, 10, 11])
        self.assertFalse(rep.witness['h_is_right_closure'])
        self.assertFalse(rep.hypothesis)
        self.assertFalse(rep.conclusion)
        self.assertTrue(rep.consistent)

    def test_r_transitive_g16(self):
        rep = check_theorem(load_builtin('g16'), [8, 9, 10, 11],
                            TheoremId.R_TRANSITIVE)
        self.assertTrue(rep.hypothesis)
        self.assertTrue(rep.conclusion)
        self.assertEqual(rep.witness['left_translation_failures'], [])

    def test_order2(self):
        rep = check_theorem(load_builtin('g16'), [8],
                            TheoremId.ORDER2_MATCHING)
        self.assertTrue(rep.hypothesis)
        self.assertTrue(rep.conclusion)
        self.assertEqual(rep.witness['edges'], 8)


class TestCheckAll(TestCase):
    def test_g16_single_generator(self):
        reps = _by_id(check_all(load_builtin('g16'), [8]))
        fwd = reps[TheoremId.R_UNDIRECTED_FWD]
        self.assertFalse(fwd.hypothesis)
        self.assertFalse(fwd.conclusion)
        self.assertEqual(fwd.witness['one_way_arc'], (4, 15))

    def test_g16_symmetric_directed(self):
        g16 = load_builtin('g16')
        reps = check_all(g16, [1, 8])
        self.assertTrue(all(rep.consistent for rep in reps))
        fwd = _by_id(reps)[TheoremId.R_UNDIRECTED_FWD]
        self.assertFalse(fwd.conclusion)

    def test_g8_not_transitive(self):
        reps = _by_id(check_all(load_builtin('g8'), [1, 2, 3]))
        und = reps[TheoremId.L_UNDIRECTED]
        self.assertTrue(und.hypothesis)
        self.assertTrue(und.conclusion)
        trans = reps[TheoremId.L_TRANSITIVE]
        self.assertFalse(trans.hypothesis)
        self.assertFalse(trans.conclusion)

    def test_order_and_purity(self):
        g15 = load_builtin('g15')
        first = check_all(g15, [1, 2])
        second = check_all(g15, [1, 2])
        self.assertEqual([rep.theorem_id for rep in first], list(TheoremId))
        self.assertEqual([rep.to_dict() for rep in first],
                         [rep.to_dict() for rep in second])

    def test_identity_rejected(self):
        with self.assertRaises(DomainError):
            check_all(load_builtin('g8'), [0, 1])

    def test_non_symmetric_connectivity_not_applicable(self):
        rep = _by_id(check_all(load_builtin('g15'), [1]))[
            TheoremId.L_CONNECTED]
        self.assertIsNone(rep.hypothesis)
        self.assertTrue(rep.consistent)


class TestBiconditionals(TestCase):
    def test_g8_small_sets(self):
        g8 = load_builtin('g8')
        for k in range(4):
            for subset in combinations(range(1, 8), k):
                reps = _by_id(check_all(
                    g8, subset, [TheoremId.L_UNDIRECTED,
                                 TheoremId.L_CONNECTED]))
                und = reps[TheoremId.L_UNDIRECTED]
                self.assertEqual(und.hypothesis, und.conclusion)
                conn = reps[TheoremId.L_CONNECTED]
                if conn.hypothesis is not None:
                    self.assertEqual(conn.hypothesis, conn.conclusion)
        self.assertEqual(BICONDITIONAL, {TheoremId.L_UNDIRECTED,
                                         TheoremId.L_CONNECTED})


class TestSearch(TestCase):
    def test_g8_all_sets(self):
        result = search_counterexamples(load_builtin('g8'),
                                        SearchConfig(max_set_size=3))
        self.assertEqual(result.violations, [])
        self.assertEqual(result.checked, 1 + 7 + 21 + 35)
        found = [(rep.gen_set, rep.theorem_id)
                 for rep in result.converse_failures]
        self.assertIn(((1, 3), TheoremId.L_TRANSITIVE), found)

    def test_g8_pairs(self):
        result = search_counterexamples(load_builtin('g8'),
                                        SearchConfig(max_set_size=2))
        found = [(rep.gen_set, rep.theorem_id)
                 for rep in result.converse_failures]
        self.assertIn(((1, 3), TheoremId.L_TRANSITIVE), found)

    def test_g15_g16_symmetric(self):
        for name in ['g15', 'g16']:
            group = load_builtin(name)
            result = search_counterexamples(
                group, SearchConfig(max_set_size=3, symmetric_only=True))
            self.assertEqual(result.violations, [])
            self.assertTrue(result.checked > 0)

    def test_r_undirected_converse_quantified(self):
        group = load_builtin('g16')
        for k in range(3):
            for subset in combinations(range(1, 16), k):
                if is_undirected(build_rcay(group, subset)):
                    self.assertTrue(check_gyr_condition(
                        group, subset, GyrConditionMode.POINT_IN_S))

    def test_theorem_filter(self):
        cfg = SearchConfig(max_set_size=2,
                           theorems=[TheoremId.L_TRANSITIVE])
        result = search_counterexamples(load_builtin('g8'), cfg)
        self.assertTrue(all(rep.theorem_id == TheoremId.L_TRANSITIVE
                            for rep in result.converse_failures))

    def test_parallel_matches_serial(self):
        group = load_builtin('g8')
        cfg = SearchConfig(max_set_size=2)
        serial = search_counterexamples(group, cfg)
        gyro = GyroManager.get_instance()
        try:
            gyro.nworkers = 2
            parallel = search_counterexamples(group, cfg)
        finally:
            gyro.reset()
        self.assertEqual(serial.to_dict(), parallel.to_dict())

    def test_guard(self):
        group = load_builtin('g16')
        cfg = SearchConfig(max_set_size=3)
        self.assertEqual(count_candidates(group, cfg), 1 + 15 + 105 + 455)
        gyro = GyroManager.get_instance()
        try:
            gyro.search_max_candidates = 100
            with self.assertRaises(DomainError):
                search_counterexamples(group, cfg)
        finally:
            gyro.reset()

    def test_bad_config(self):
        with self.assertRaises(DomainError):
            SearchConfig(max_set_size=0)
