"""
Export the L- and R-Cayley graphs drawn for the builtin gyrogroups as DOT
files in the current directory. Render with e.g. `neato -Tpng`.
"""

from gyro_cayley.builtins import load_builtin
from gyro_cayley.graph.cayley_graph import build_cayley
from gyro_cayley.graph.graph_analysis import is_vertex_transitive
from gyro_cayley.serialize.graph_export import export_graph
from gyro_cayley.serialize.text_file import TextFile

FIGURES = [
    ('g8', 'L', [1, 3]),
    ('g8', 'L', [1, 2, 3]),
    ('g16', 'L', [1, 2, 3]),
    ('g16', 'R', [8]),
    ('g16', 'R', [8, 9]),
    ('g16', 'R', [8, 9, 10, 11]),
]

for name, side, gens in FIGURES:
    group = load_builtin(name)
    graph = build_cayley(group, gens, side)
    label = f'{side}Cay_{name}_{"-".join(str(s) for s in gens)}'
    TextFile(f'{label}.dot').save(export_graph(graph, 'dot', labels=True,
                                               name=label))
    print(f'{label}: {graph.num_arcs()} arcs, vertex-transitive='
          f'{is_vertex_transitive(graph).holds}')
