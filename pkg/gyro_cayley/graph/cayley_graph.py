"""
This module builds left and right Cayley graphs of a gyrogroup, decides
undirectedness, computes connected components, and evaluates the gyration
side-conditions on a generating set.

    LCay(G,S): arc u -> v iff v = s + u for some s in S
    RCay(G,S): arc u -> v iff v = u + s for some s in S
"""

from enum import Enum
import networkx as nx
from gyro_cayley.algebra.subgyro import GenSet
from gyro_cayley.algebra.verdict import Verdict
from gyro_cayley.util.errors import DomainError


class DiGraph:
    """
    An immutable simple digraph on the vertices 0..n-1. Every arc carries
    the set of generators that produce it.
    """

    def __init__(self, n, labels, side=None, gens=None):
        """
        :param n: The number of vertices
        :param labels: Dict[(u, v), frozenset of generators]
        :param side: 'L' or 'R' for Cayley graphs
        :param gens: The GenSet the graph was built from
        """
        out_adj = [set() for _ in range(n)]
        for (u, v) in labels:
            if u == v:
                raise DomainError(f'self-loop at {u}')
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f'arc {u}->{v} leaves the vertex set')
            out_adj[u].add(v)
        self.n = n
        self.out_adj = tuple(tuple(sorted(vs)) for vs in out_adj)
        in_adj = [[] for _ in range(n)]
        for u, vs in enumerate(self.out_adj):
            for v in vs:
                in_adj[v].append(u)
        self.in_adj = tuple(tuple(us) for us in in_adj)
        self.labels = {arc: frozenset(gs) for arc, gs in labels.items()}
        self.side = side
        self.gens = gens
        self._arc_set = frozenset(self.labels)

    @staticmethod
    def from_arcs(n, arcs):
        """
        A plain digraph. Arcs are labeled with the empty set.
        """
        return DiGraph(n, {(int(u), int(v)): frozenset() for u, v in arcs})

    def arcs(self):
        """
        :return: List[(u, v)] in lexicographic order
        """
        return [(u, v) for u in range(self.n) for v in self.out_adj[u]]

    def has_arc(self, u, v):
        return (u, v) in self._arc_set

    def out_degree(self, v):
        return len(self.out_adj[v])

    def in_degree(self, v):
        return len(self.in_adj[v])

    def num_arcs(self):
        return len(self._arc_set)

    def neighbors(self, v):
        """
        Vertices joined to v by an arc in either direction
        """
        return sorted(set(self.out_adj[v]) | set(self.in_adj[v]))

    def relabel(self, perm):
        """
        The isomorphic graph with vertex x renamed perm(x).

        :param perm: Permutation on the vertices
        :return: DiGraph
        """
        labels = {(perm(u), perm(v)): gs for (u, v), gs in self.labels.items()}
        return DiGraph(self.n, labels, self.side, self.gens)

    def to_networkx(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.arcs())
        return graph

    def __eq__(self, other):
        return (isinstance(other, DiGraph) and self.n == other.n and
                self._arc_set == other._arc_set)

    def __hash__(self):
        return hash((self.n, self._arc_set))

    def __repr__(self):
        kind = f'{self.side}Cay' if self.side else 'DiGraph'
        return f'{kind}(n={self.n}, arcs={self.num_arcs()})'


class GyrConditionMode(Enum):
    """
    Gyration side-conditions on a generating set S:
        IDENTITY_ON_G_x_S: gyr[g,s] = id for g in G, s in S
        SETWISE_G_x_S: gyr[g,s](S) = S for g in G, s in S
        SETWISE_G_x_G: gyr[g,g'](S) = S for g, g' in G
        SETWISE_G_x_H: gyr[g,h](S) = S for g in G, h in H
        POINT_IN_S: gyr[g,s](s) in S for g in G, s in S
    """
    IDENTITY_ON_G_x_S = 'identity_on_g_x_s'
    SETWISE_G_x_S = 'setwise_g_x_s'
    SETWISE_G_x_G = 'setwise_g_x_g'
    SETWISE_G_x_H = 'setwise_g_x_h'
    POINT_IN_S = 'point_in_s'


def _cayley_genset(group, gens):
    if not isinstance(gens, GenSet):
        gens = GenSet(group, gens)
    return gens.require_no_identity()


def is_symmetric_set(group, gens):
    """
    Whether -s is in S for every s in S.

    :param group: Gyrogroup
    :param gens: GenSet or iterable of elements, without the identity
    :return: bool
    """
    return _cayley_genset(group, gens).is_symmetric


def _build(group, gens, side):
    gens = _cayley_genset(group, gens)
    arr = group.add_arr
    labels = {}
    for u in group.elements():
        for s in gens:
            v = int(arr[s, u]) if side == 'L' else int(arr[u, s])
            labels.setdefault((u, v), set()).add(s)
    return DiGraph(group.order, labels, side, gens)


def build_lcay(group, gens):
    """
    The left Cayley graph: u -> s + u.

    :param group: Gyrogroup
    :param gens: GenSet or iterable of elements, without the identity
    :return: DiGraph
    """
    return _build(group, gens, 'L')


def build_rcay(group, gens):
    """
    The right Cayley graph: u -> u + s.
    """
    return _build(group, gens, 'R')


def build_cayley(group, gens, side):
    """
    :param side: 'L' or 'R'
    """
    side = str(side).upper()
    if side not in ('L', 'R'):
        raise DomainError(f'side must be L or R, not {side}')
    return _build(group, gens, side)


def is_undirected(graph):
    """
    Whether every arc u -> v has its reverse v -> u.

    :param graph: DiGraph
    :return: Verdict, witness (u, v) is the least one-way arc
    """
    for u, v in graph.arcs():
        if not graph.has_arc(v, u):
            return Verdict(False, (u, v))
    return Verdict(True)


def connected_components(graph):
    """
    The weakly connected components, each sorted, ordered by least vertex.

    :param graph: DiGraph
    :return: List[Tuple[int]]
    """
    comps = nx.weakly_connected_components(graph.to_networkx())
    return sorted(tuple(sorted(comp)) for comp in comps)


def is_connected(graph):
    return len(connected_components(graph)) <= 1


def check_gyr_condition(group, gens, mode, h_set=None):
    """
    Evaluate a gyration side-condition on S.

    :param group: Gyrogroup
    :param gens: GenSet or iterable of elements
    :param mode: GyrConditionMode
    :param h_set: The set H, required by SETWISE_G_x_H
    :return: Verdict, witness (g, x) is the least pair violating the
    condition, with x ranging over S, G or H according to the mode
    """
    if not isinstance(gens, GenSet):
        gens = GenSet(group, gens)
    mode = GyrConditionMode(mode)
    gy = group.gyr_arr
    members = gens.members
    elems = sorted(members)
    if mode == GyrConditionMode.SETWISE_G_x_H:
        if h_set is None:
            raise DomainError('SETWISE_G_x_H needs the set H')
        second = sorted(set(group.check_elements(h_set)))
    elif mode == GyrConditionMode.SETWISE_G_x_G:
        second = list(group.elements())
    else:
        second = elems

    def holds(g, x):
        perm = gy[g, x]
        if mode == GyrConditionMode.IDENTITY_ON_G_x_S:
            return all(int(perm[c]) == c for c in group.elements())
        if mode == GyrConditionMode.POINT_IN_S:
            return int(perm[x]) in members
        return all(int(perm[s]) in members for s in elems)

    for g in group.elements():
        for x in second:
            if not holds(g, x):
                return Verdict(False, (g, x))
    return Verdict(True)
