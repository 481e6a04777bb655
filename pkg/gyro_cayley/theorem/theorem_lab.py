"""
This module turns the structural theorems on L- and R-Cayley graphs of
gyrogroups into executable hypothesis => conclusion checks, and searches
generating sets for violations and converse failures.

    L_UNDIRECTED: S symmetric <=> LCay(G,S) undirected
    L_CONNECTED: for symmetric S, S left-generates G <=> LCay connected
    ORDER2_MATCHING: S = {s}, s = -s => LCay is |G|/2 disjoint edges and
        vertex-transitive
    L_TRANSITIVE: S symmetric, gyr[g,s] = id => LCay vertex-transitive
    R_UNDIRECTED_FWD: S symmetric, gyr[g,s](S) = S => RCay undirected
    R_UNDIRECTED_CONV: RCay undirected => gyr[g,s]s in S
    R_TRANSITIVE: S symmetric, gyr[g,g'](S) = S => RCay vertex-transitive
    COMPONENTS_COSETS: S symmetric, right-generating an L-subgyrogroup H
        with gyr[g,h](S) = S => components of RCay = left cosets of H
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Tuple
from gyro_cayley.algebra.subgyro import (GenSet, is_l_subgyrogroup,
                                         left_closure, left_coset_blocks,
                                         right_closure)
from gyro_cayley.graph.cayley_graph import (GyrConditionMode, build_lcay,
                                            build_rcay, check_gyr_condition,
                                            connected_components,
                                            is_undirected)
from gyro_cayley.graph.graph_analysis import (is_automorphism,
                                              is_perfect_matching,
                                              is_vertex_transitive,
                                              num_edges, translation_map)
from gyro_cayley.gyro_manager import GyroManager
from gyro_cayley.util.errors import DomainError
from gyro_cayley.util.logging import ColorPrinter


class TheoremId(Enum):
    L_UNDIRECTED = 'L_UNDIRECTED'
    L_CONNECTED = 'L_CONNECTED'
    ORDER2_MATCHING = 'ORDER2_MATCHING'
    L_TRANSITIVE = 'L_TRANSITIVE'
    R_UNDIRECTED_FWD = 'R_UNDIRECTED_FWD'
    R_UNDIRECTED_CONV = 'R_UNDIRECTED_CONV'
    R_TRANSITIVE = 'R_TRANSITIVE'
    COMPONENTS_COSETS = 'COMPONENTS_COSETS'

    @staticmethod
    def parse(name):
        if isinstance(name, TheoremId):
            return name
        try:
            return TheoremId(str(name).upper())
        except ValueError as err:
            known = ', '.join(tid.value for tid in TheoremId)
            raise DomainError(f'unknown theorem {name}; choose one of '
                              f'{known}') from err


BICONDITIONAL = frozenset([TheoremId.L_UNDIRECTED, TheoremId.L_CONNECTED])


@dataclass
class TheoremReport:
    """
    The evaluated hypothesis and conclusion of one theorem on one S.
    hypothesis is None when the theorem does not apply to S.
    """
    theorem_id: TheoremId
    gen_set: Tuple[int, ...]
    hypothesis: Optional[bool]
    conclusion: bool
    biconditional: bool = False
    witness: Dict[str, Any] = field(default_factory=dict)

    @property
    def consistent(self):
        if self.hypothesis is None:
            return True
        if self.biconditional:
            return self.hypothesis == self.conclusion
        return not self.hypothesis or self.conclusion

    @property
    def converse_failure(self):
        """
        The conclusion holds although the hypothesis does not
        """
        return self.hypothesis is False and self.conclusion

    def to_dict(self):
        return {
            'theorem': self.theorem_id.value,
            'set': list(self.gen_set),
            'hypothesis': self.hypothesis,
            'conclusion': self.conclusion,
            'consistent': self.consistent,
            'biconditional': self.biconditional,
            'witness': _plain(self.witness),
        }


def _plain(data):
    if isinstance(data, dict):
        return {str(key): _plain(val) for key, val in data.items()}
    if isinstance(data, (list, tuple, set, frozenset)):
        items = sorted(data) if isinstance(data, (set, frozenset)) else data
        return [_plain(x) for x in items]
    return data


class _Facts:
    """
    Lazily computed facts about (G, S), shared by the theorems of one call.
    """

    def __init__(self, group, gens):
        self.group = group
        self.gens = gens.require_no_identity()

    @cached_property
    def symmetric(self):
        return self.gens.is_symmetric

    @cached_property
    def lcay(self):
        return build_lcay(self.group, self.gens)

    @cached_property
    def rcay(self):
        return build_rcay(self.group, self.gens)

    @cached_property
    def lcay_undirected(self):
        return is_undirected(self.lcay)

    @cached_property
    def rcay_undirected(self):
        return is_undirected(self.rcay)

    @cached_property
    def lcay_transitive(self):
        return is_vertex_transitive(self.lcay)

    @cached_property
    def rcay_transitive(self):
        return is_vertex_transitive(self.rcay)

    @cached_property
    def lcay_components(self):
        return connected_components(self.lcay)

    @cached_property
    def rcay_components(self):
        return connected_components(self.rcay)

    def condition(self, mode, h_set=None):
        return check_gyr_condition(self.group, self.gens, mode, h_set)

    def unpaired(self):
        """The least s in S with -s outside S"""
        for s in sorted(self.gens.members):
            if self.group.inv[s] not in self.gens:
                return s
        return None

    def translation_failures(self, graph, side):
        return [g for g in self.group.elements()
                if not is_automorphism(
                    graph, translation_map(self.group, g, side))]


def _l_undirected(facts, report):
    report.hypothesis = facts.symmetric
    report.conclusion = facts.lcay_undirected.holds
    if not facts.symmetric:
        report.witness['unpaired'] = facts.unpaired()
    if not report.conclusion:
        report.witness['one_way_arc'] = facts.lcay_undirected.witness


def _l_connected(facts, report):
    group = facts.group
    report.conclusion = len(facts.lcay_components) == 1
    report.witness['components'] = len(facts.lcay_components)
    if not facts.symmetric:
        report.hypothesis = None
        return
    span = left_closure(group, facts.gens) | {group.identity}
    report.hypothesis = len(span) == group.order
    if not report.hypothesis:
        report.witness['left_closure'] = sorted(span)


def _order2_matching(facts, report):
    group = facts.group
    gens = facts.gens.elements
    report.hypothesis = (len(gens) == 1 and
                         group.inv[gens[0]] == gens[0])
    graph = facts.lcay
    matching = is_perfect_matching(graph)
    edges = num_edges(graph)
    report.witness['edges'] = edges
    report.conclusion = (matching and 2 * edges == group.order and
                         facts.lcay_transitive.holds)


def _l_transitive(facts, report):
    identity = facts.condition(GyrConditionMode.IDENTITY_ON_G_x_S)
    report.hypothesis = facts.symmetric and identity.holds
    report.conclusion = facts.lcay_transitive.holds
    if facts.symmetric and not identity:
        report.witness['nonidentity_gyration'] = identity.witness
    if not report.conclusion:
        report.witness['unreachable'] = facts.lcay_transitive.witness
    if report.hypothesis:
        report.witness['right_translation_failures'] = \
            facts.translation_failures(facts.lcay, 'R')


def _r_undirected_fwd(facts, report):
    setwise = facts.condition(GyrConditionMode.SETWISE_G_x_S)
    report.hypothesis = facts.symmetric and setwise.holds
    report.conclusion = facts.rcay_undirected.holds
    if facts.symmetric and not setwise:
        report.witness['gyration_escape'] = setwise.witness
    if not report.conclusion:
        report.witness['one_way_arc'] = facts.rcay_undirected.witness


def _r_undirected_conv(facts, report):
    point = facts.condition(GyrConditionMode.POINT_IN_S)
    report.hypothesis = facts.rcay_undirected.holds
    report.conclusion = point.holds
    if not point:
        report.witness['point_escape'] = point.witness


def _r_transitive(facts, report):
    setwise = facts.condition(GyrConditionMode.SETWISE_G_x_G)
    report.hypothesis = facts.symmetric and setwise.holds
    report.conclusion = facts.rcay_transitive.holds
    if facts.symmetric and not setwise:
        report.witness['gyration_escape'] = setwise.witness
    if not report.conclusion:
        report.witness['unreachable'] = facts.rcay_transitive.witness
    if report.hypothesis:
        report.witness['left_translation_failures'] = \
            facts.translation_failures(facts.rcay, 'L')


def _components_cosets(facts, report, aux=None):
    group = facts.group
    closure = right_closure(group, facts.gens) | {group.identity}
    h_set = closure if aux is None else \
        frozenset(group.check_elements(aux))
    bits = {
        'symmetric': facts.symmetric,
        'h_is_right_closure': h_set == closure,
        'l_subgyrogroup': is_l_subgyrogroup(group, h_set).holds,
        'gyr_setwise': facts.condition(GyrConditionMode.SETWISE_G_x_H,
                                       h_set).holds,
    }
    cosets = [tuple(sorted(block))
              for block in left_coset_blocks(group, h_set)]
    report.hypothesis = all(bits.values())
    report.conclusion = (set(facts.rcay_components) == set(cosets))
    report.witness.update(bits)
    report.witness['H'] = sorted(h_set)
    report.witness['components'] = facts.rcay_components
    report.witness['cosets'] = cosets


_CHECKS = {
    TheoremId.L_UNDIRECTED: _l_undirected,
    TheoremId.L_CONNECTED: _l_connected,
    TheoremId.ORDER2_MATCHING: _order2_matching,
    TheoremId.L_TRANSITIVE: _l_transitive,
    TheoremId.R_UNDIRECTED_FWD: _r_undirected_fwd,
    TheoremId.R_UNDIRECTED_CONV: _r_undirected_conv,
    TheoremId.R_TRANSITIVE: _r_transitive,
    TheoremId.COMPONENTS_COSETS: _components_cosets,
}


def _as_genset(group, gens):
    if isinstance(gens, GenSet):
        return gens
    return GenSet(group, gens)


def _run(facts, theorem_id, aux=None):
    report = TheoremReport(theorem_id, tuple(sorted(facts.gens.members)),
                           None, False, theorem_id in BICONDITIONAL)
    if theorem_id == TheoremId.COMPONENTS_COSETS:
        _components_cosets(facts, report, aux)
    elif aux is not None:
        raise DomainError(f'{theorem_id.value} takes no auxiliary set')
    else:
        _CHECKS[theorem_id](facts, report)
    return report


def check_theorem(group, gens, theorem_id, aux=None):
    """
    Evaluate the hypothesis and the conclusion of one theorem.

    :param group: Gyrogroup
    :param gens: GenSet or iterable of elements, without the identity
    :param theorem_id: TheoremId or its name
    :param aux: The set H of COMPONENTS_COSETS. Defaults to the right
    closure of S together with the identity.
    :return: TheoremReport
    """
    theorem_id = TheoremId.parse(theorem_id)
    facts = _Facts(group, _as_genset(group, gens))
    return _run(facts, theorem_id, aux)


def check_all(group, gens, theorems=None):
    """
    Evaluate every theorem (or a selection) on one generating set.

    :param group: Gyrogroup
    :param gens: GenSet or iterable of elements, without the identity
    :param theorems: Optional iterable of TheoremId; all by default
    :return: List[TheoremReport] in TheoremId order
    """
    facts = _Facts(group, _as_genset(group, gens))
    selected = _select(theorems)
    return [_run(facts, tid) for tid in selected]


def _select(theorems):
    if theorems is None:
        return list(TheoremId)
    wanted = {TheoremId.parse(tid) for tid in theorems}
    return [tid for tid in TheoremId if tid in wanted]


@dataclass
class SearchConfig:
    """
    :param max_set_size: Largest |S| enumerated
    :param symmetric_only: Skip non-symmetric S
    :param theorems: Restrict to these TheoremIds
    :param pool: Restrict S to subsets of these elements
    """
    max_set_size: int = 3
    symmetric_only: bool = False
    theorems: Optional[List[Any]] = None
    pool: Optional[List[int]] = None

    def __post_init__(self):
        if self.max_set_size < 1:
            raise DomainError(f'max_set_size must be at least 1, got '
                              f'{self.max_set_size}')


@dataclass
class SearchResult:
    """
    violations: reports contradicting their theorem (expected empty)
    converse_failures: reports whose conclusion holds without the
    hypothesis
    checked: the number of generating sets evaluated
    """
    violations: List[TheoremReport] = field(default_factory=list)
    converse_failures: List[TheoremReport] = field(default_factory=list)
    checked: int = 0

    def to_dict(self):
        return {
            'checked': self.checked,
            'violations': [rep.to_dict() for rep in self.violations],
            'converse_failures': [rep.to_dict()
                                  for rep in self.converse_failures],
        }


def _candidate_pool(group, cfg):
    if cfg.pool is None:
        pool = list(group.elements())
    else:
        pool = sorted(set(group.check_elements(cfg.pool)))
    return [x for x in pool if x != group.identity]


def count_candidates(group, cfg):
    pool = _candidate_pool(group, cfg)
    top = min(cfg.max_set_size, len(pool))
    return sum(comb(len(pool), k) for k in range(top + 1))


def _candidates(group, cfg):
    pool = _candidate_pool(group, cfg)
    for k in range(min(cfg.max_set_size, len(pool)) + 1):
        for subset in combinations(pool, k):
            if cfg.symmetric_only and \
                    any(group.inv[s] not in subset for s in subset):
                continue
            yield subset


def _check_chunk(group, subsets, theorems):
    """
    Evaluate a chunk of generating sets. Runs in worker processes.

    :return: SearchResult
    """
    result = SearchResult()
    for subset in subsets:
        result.checked += 1
        for report in check_all(group, subset, theorems):
            if not report.consistent:
                result.violations.append(report)
            elif report.converse_failure:
                result.converse_failures.append(report)
    return result


def _chunks(items, nchunks):
    size = max(1, -(-len(items) // nchunks))
    return [items[i:i + size] for i in range(0, len(items), size)]


def search_counterexamples(group, cfg=None):
    """
    Check the theorems on every generating set S up to cfg.max_set_size
    (identity excluded, sizes ascending, each size lexicographic).

    :param group: Gyrogroup
    :param cfg: SearchConfig
    :return: SearchResult
    """
    if cfg is None:
        cfg = SearchConfig()
    gyro = GyroManager.get_instance()
    total = count_candidates(group, cfg)
    if total > gyro.search_max_candidates:
        raise DomainError(
            f'the search over {group.label()} would visit {total} '
            f'generating sets, above the bound search_max_candidates='
            f'{gyro.search_max_candidates}')
    theorems = _select(cfg.theorems)
    subsets = list(_candidates(group, cfg))
    ColorPrinter.debug('debug_search',
                       f'searching {len(subsets)} generating sets of '
                       f'{group.label()} with {gyro.nworkers} worker(s)')
    if gyro.nworkers <= 1 or len(subsets) < 2:
        return _check_chunk(group, subsets, theorems)
    chunks = _chunks(subsets, gyro.nworkers * 4)
    merged = SearchResult()
    with ProcessPoolExecutor(max_workers=gyro.nworkers) as pool:
        futures = [pool.submit(_check_chunk, group, chunk, theorems)
                   for chunk in chunks]
        for future in futures:
            part = future.result()
            merged.checked += part.checked
            merged.violations += part.violations
            merged.converse_failures += part.converse_failures
    return merged
