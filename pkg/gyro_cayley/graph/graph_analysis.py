"""
This module decides vertex-transitivity by backtracking automorphism
search and provides structural predicates on digraphs (perfect matching,
cycle, components against a partition, translation automorphisms).
"""

from gyro_cayley.algebra.permutation import Permutation
from gyro_cayley.algebra.verdict import Verdict
from gyro_cayley.graph.cayley_graph import (connected_components,
                                            is_undirected)
from gyro_cayley.util.errors import DomainError
from gyro_cayley.util.logging import ColorPrinter


def vertex_colors(graph):
    """
    The pruning coloring: (in-degree, out-degree), refined once by the
    sorted colors of the out- and in-neighbors. Automorphisms preserve it.

    :param graph: DiGraph
    :return: List of hashable colors, indexed by vertex
    """
    base = [(graph.in_degree(x), graph.out_degree(x))
            for x in range(graph.n)]
    return [(base[x],
             tuple(sorted(base[y] for y in graph.out_adj[x])),
             tuple(sorted(base[y] for y in graph.in_adj[x])))
            for x in range(graph.n)]


def _search_order(graph, start):
    """
    BFS order from start, continuing from the least unvisited vertex
    whenever a component is exhausted.
    """
    order = []
    seen = set()
    for root in [start] + list(range(graph.n)):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in graph.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


class _AutomorphismSearch:
    def __init__(self, graph):
        self.graph = graph
        self.colors = vertex_colors(graph)
        self.nodes = 0

    def run(self, u, v):
        if self.colors[u] != self.colors[v]:
            return None
        order = _search_order(self.graph, u)
        mapping = {u: v}
        used = {v}
        if not self._extend(order, 1, mapping, used):
            return None
        return Permutation(mapping[x] for x in range(self.graph.n))

    def _consistent(self, x, y, mapping):
        graph = self.graph
        for w, img in mapping.items():
            if graph.has_arc(x, w) != graph.has_arc(y, img):
                return False
            if graph.has_arc(w, x) != graph.has_arc(img, y):
                return False
        return True

    def _extend(self, order, depth, mapping, used):
        if depth == len(order):
            return True
        x = order[depth]
        for y in range(self.graph.n):
            if y in used or self.colors[y] != self.colors[x]:
                continue
            self.nodes += 1
            if not self._consistent(x, y, mapping):
                continue
            mapping[x] = y
            used.add(y)
            if self._extend(order, depth + 1, mapping, used):
                return True
            del mapping[x]
            used.discard(y)
        return False


def _check_vertex(graph, x):
    if not 0 <= x < graph.n:
        raise DomainError(f'{x} is not a vertex of {graph}')
    return x


def find_automorphism(graph, u, v):
    """
    Search for an automorphism sending u to v. Candidates are tried in
    ascending order, so the result is deterministic; None means no such
    automorphism exists.

    :param graph: DiGraph
    :param u: Source vertex
    :param v: Target vertex
    :return: Permutation or None
    """
    u = _check_vertex(graph, u)
    v = _check_vertex(graph, v)
    search = _AutomorphismSearch(graph)
    perm = search.run(u, v)
    ColorPrinter.debug('debug_automorphism',
                       f'{graph}: {u}->{v} after {search.nodes} nodes: '
                       f'{perm if perm is not None else "none"}')
    if perm is not None and not is_automorphism(graph, perm):
        raise RuntimeError(f'automorphism search returned {perm}, which '
                           f'does not preserve the arcs of {graph}')
    return perm


def is_vertex_transitive(graph):
    """
    Whether every vertex is the image of vertex 0 under some automorphism.

    :param graph: DiGraph
    :return: Verdict, witness (0, v) for the least unreachable v
    """
    if graph.n == 0:
        return Verdict(True)
    colors = vertex_colors(graph)
    for v in range(graph.n):
        if colors[v] != colors[0]:
            return Verdict(False, (0, v))
    orbit = {0}
    for v in range(1, graph.n):
        if v in orbit:
            continue
        perm = find_automorphism(graph, 0, v)
        if perm is None:
            return Verdict(False, (0, v))
        x = perm(0)
        while x not in orbit:
            orbit.add(x)
            x = perm(x)
    return Verdict(True)


def num_edges(graph):
    """
    The number of vertex pairs joined by at least one arc
    """
    return len({frozenset(arc) for arc in graph.arcs()})


def is_perfect_matching(graph):
    """
    Undirected, nonempty, every vertex has exactly one neighbor, and n is
    even.
    """
    if graph.n == 0 or graph.n % 2 != 0 or not is_undirected(graph):
        return False
    return all(graph.out_degree(x) == 1 for x in range(graph.n))


def is_cycle(graph):
    """
    Undirected, connected, and every vertex has degree 2.
    """
    if graph.n < 3 or not is_undirected(graph):
        return False
    if any(graph.out_degree(x) != 2 for x in range(graph.n)):
        return False
    return len(connected_components(graph)) == 1


def components_equal_partition(graph, partition):
    """
    Whether the weak components of a graph are exactly the given blocks.

    :param graph: DiGraph
    :param partition: CosetPartition or iterable of blocks
    :return: bool
    """
    blocks = getattr(partition, 'blocks', partition)
    blocks = {frozenset(block) for block in blocks}
    covered = sum(len(block) for block in blocks)
    if covered != graph.n:
        raise DomainError(f'the partition covers {covered} points, the '
                          f'graph has {graph.n} vertices')
    comps = {frozenset(comp) for comp in connected_components(graph)}
    return comps == blocks


def translation_map(group, g, side):
    """
    The right translation x -> x + g (side 'R') or the left translation
    x -> g + x (side 'L').

    :return: Permutation
    """
    g = group.check_element(g)
    side = str(side).upper()
    if side == 'R':
        return Permutation(group.add_arr[:, g].tolist())
    if side == 'L':
        return Permutation(group.add_arr[g, :].tolist())
    raise DomainError(f'side must be L or R, not {side}')


def is_automorphism(graph, perm):
    """
    Whether a vertex permutation maps arcs to arcs.

    :param graph: DiGraph
    :param perm: Permutation on the vertices
    :return: Verdict, witness is the least arc (u, v) whose image is not
    an arc
    """
    if len(perm) != graph.n:
        raise DomainError(f'{perm!r} does not act on the {graph.n} '
                          f'vertices of {graph}')
    for u, v in graph.arcs():
        if not graph.has_arc(perm(u), perm(v)):
            return Verdict(False, (u, v))
    return Verdict(True)
