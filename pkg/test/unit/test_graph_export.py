from gyro_cayley.builtins import load_builtin
from gyro_cayley.graph.cayley_graph import DiGraph, build_lcay, build_rcay
from gyro_cayley.graph.graph_analysis import num_edges
from gyro_cayley.serialize.graph_export import (export_graph, to_dot,
                                                to_json)
from gyro_cayley.serialize.json_file import JsonFile
from gyro_cayley.util.errors import DomainError
import json
import pathlib
import tempfile
from unittest import TestCase


def _edge_lines(text):
    return [line for line in text.splitlines() if '->' in line]


class TestDot(TestCase):
    def test_undirected_edges(self):
        graph = build_lcay(load_builtin('g8'), [1, 3])
        text = to_dot(graph)
        edges = _edge_lines(text)
        self.assertEqual(len(edges), num_edges(graph))
        self.assertTrue(all('dir=none' in line for line in edges))
        self.assertTrue(text.startswith('digraph "LCay(n=8, arcs=16)" {\n'))
        self.assertTrue(text.endswith('}\n'))

    def test_one_way_arc(self):
        graph = build_rcay(load_builtin('g16'), [8])
        text = to_dot(graph, labels=True)
        self.assertIn('  4 -> 15 [label="8"];', text.splitlines())
        directed = [line for line in _edge_lines(text)
                    if 'dir=none' not in line]
        self.assertTrue(len(directed) > 0)

    def test_labels_merge_pairs(self):
        graph = DiGraph(3, {(0, 1): {5}, (1, 0): {7}})
        text = to_dot(graph, labels=True, name='pair')
        self.assertEqual(_edge_lines(text),
                         ['  0 -> 1 [dir=none, label="5,7"];'])

    def test_edgeless(self):
        graph = build_lcay(load_builtin('g8'), [])
        text = to_dot(graph)
        self.assertEqual(_edge_lines(text), [])
        self.assertEqual(len(text.splitlines()), 10)

    def test_stable(self):
        group = load_builtin('g15')
        first = export_graph(build_rcay(group, [1, 2, 3]), 'dot', True)
        second = export_graph(build_rcay(group, [3, 2, 1]), 'dot', True)
        self.assertEqual(first, second)


class TestJson(TestCase):
    def test_lcay(self):
        graph = build_lcay(load_builtin('g8'), [1, 3])
        data = json.loads(to_json(graph))
        self.assertEqual(data['n'], 8)
        self.assertEqual(len(data['arcs']), 16)
        self.assertEqual(data['arcs'], sorted(data['arcs']))
        self.assertEqual(len(data['labels']), 16)
        for (u, v), gens in zip(data['arcs'], data['labels']):
            self.assertTrue(graph.has_arc(u, v))
            self.assertEqual(gens, sorted(graph.labels[(u, v)]))

    def test_bytes(self):
        graph = DiGraph(2, {(0, 1): {1}})
        self.assertEqual(to_json(graph),
                         '{"arcs":[[0,1]],"labels":[[1]],"n":2}\n')

    def test_unknown_format(self):
        with self.assertRaises(DomainError):
            export_graph(DiGraph(1, {}), 'png')

    def test_json_file(self):
        graph = build_rcay(load_builtin('g16'), [8, 9])
        with tempfile.TemporaryDirectory() as tmp:
            path = pathlib.Path(tmp) / 'rcay.json'
            JsonFile(str(path)).save(json.loads(to_json(graph)))
            self.assertEqual(path.read_text(encoding='utf-8'),
                             to_json(graph))
            data = JsonFile(str(path)).load()
            self.assertEqual(data['n'], 16)
            self.assertEqual(len(data['arcs']), graph.num_arcs())
