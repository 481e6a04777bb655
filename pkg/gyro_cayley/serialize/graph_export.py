"""
This module renders digraphs as DOT or JSON text. The output depends only
on the graph, so identical graphs export to identical bytes.
"""

from gyro_cayley.serialize.json_file import JsonFile
from gyro_cayley.util.errors import DomainError

EXPORT_FORMATS = ('dot', 'json')


def _label(gens):
    return ','.join(str(s) for s in sorted(gens))


def to_dot(graph, labels=False, name=None):
    """
    DOT text. A pair of opposite arcs becomes one edge with dir=none;
    a one-way arc stays directed.

    :param graph: DiGraph
    :param labels: Label edges with the generators producing them
    :param name: The graph name
    :return: str
    """
    if name is None:
        name = repr(graph)
    lines = [f'digraph "{name}" {{']
    for v in range(graph.n):
        lines.append(f'  {v};')
    for u, v in graph.arcs():
        attrs = []
        gens = set(graph.labels[(u, v)])
        if graph.has_arc(v, u):
            if v < u:
                continue
            attrs.append('dir=none')
            gens |= graph.labels[(v, u)]
        if labels:
            attrs.append(f'label="{_label(gens)}"')
        attr_text = f' [{", ".join(attrs)}]' if attrs else ''
        lines.append(f'  {u} -> {v}{attr_text};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def to_json(graph):
    """
    {"n": n, "arcs": [[u, v], ...], "labels": [[s, ...], ...]} with arcs
    sorted and labels aligned to arcs.
    """
    arcs = graph.arcs()
    return JsonFile.dumps({
        'n': graph.n,
        'arcs': [[u, v] for u, v in arcs],
        'labels': [sorted(graph.labels[arc]) for arc in arcs],
    })


def export_graph(graph, fmt='dot', labels=False, name=None):
    """
    :param graph: DiGraph
    :param fmt: 'dot' or 'json'
    :param labels: DOT only. Label edges with their generators.
    :param name: DOT only. The graph name.
    :return: str
    """
    if fmt == 'dot':
        return to_dot(graph, labels, name)
    if fmt == 'json':
        return to_json(graph)
    raise DomainError(f'unknown export format {fmt}; choose one of '
                      f'{", ".join(EXPORT_FORMATS)}')
