"""
The gyro-cayley command line.

    gyro-cayley verify builtin:g15
    gyro-cayley analyze builtin:g16 --side R --set 8,9
    gyro-cayley search builtin:g8 --max-set-size 3

Exit codes: 0 success, 1 verification failure or theorem violation,
2 usage, parse or domain error.
"""

import sys
from tabulate import tabulate
from gyro_cayley.algebra.gyrogroup import check_identities, verify_axioms
from gyro_cayley.algebra.subgyro import (GenSet, Subgyrogroup,
                                         all_subgyrogroups,
                                         generated_subgyrogroup,
                                         is_l_subgyrogroup, is_subgyrogroup,
                                         left_closure, left_cosets,
                                         right_closure)
from gyro_cayley.builtins import (BUILTIN_PREFIX, builtin_text,
                                  load_gyrogroup)
from gyro_cayley.graph.cayley_graph import (GyrConditionMode, build_cayley,
                                            check_gyr_condition,
                                            connected_components,
                                            is_undirected)
from gyro_cayley.graph.graph_analysis import (is_cycle, is_perfect_matching,
                                              is_vertex_transitive)
from gyro_cayley.gyro_manager import GyroManager
from gyro_cayley.serialize.graph_export import EXPORT_FORMATS, export_graph
from gyro_cayley.serialize.table_file import (TableFile, format_table_file,
                                              read_table_file)
from gyro_cayley.serialize.text_file import TextFile
from gyro_cayley.serialize.yaml_file import YamlFile
from gyro_cayley.theorem.theorem_lab import (SearchConfig, check_all,
                                             search_counterexamples)
from gyro_cayley.util.argparse import USAGE_EXIT, ArgParse
from gyro_cayley.util.element_set import format_element_set
from gyro_cayley.util.errors import (ArgParseError, GyroError,
                                     VerificationError)
from gyro_cayley.util.logging import Color, ColorPrinter

EXIT_OK = 0
EXIT_FAILED = 1


def _src_arg():
    return {
        'name': 'src',
        'msg': 'A table file or builtin:g8|g15|g16',
        'type': str,
        'required': True,
        'pos': True,
    }


def _config_arg():
    return {
        'name': 'config',
        'msg': 'A YAML file overriding GyroManager properties',
        'type': str,
        'default': None,
        'class': 'config',
    }


def _set_arg(required=True):
    return {
        'name': 'set',
        'msg': 'Comma-separated elements and ranges, e.g. 1,3 or 8-11',
        'type': str,
        'default': None if required else '',
        'required': required,
    }


def _side_arg():
    return {
        'name': 'side',
        'msg': 'L for u -> s + u, R for u -> u + s',
        'type': str,
        'choices': ['L', 'R'],
        'default': 'L',
    }


def _out_arg(msg):
    return {
        'name': 'out',
        'msg': msg,
        'type': str,
        'default': None,
    }


def _yes(flag):
    return 'yes' if flag else 'no'


def _fmt_set(elems):
    return '{' + format_element_set(sorted(elems)) + '}'


class GyroArgParse(ArgParse):
    """
    The commands of gyro-cayley. Each command method returns an exit code.
    """

    def define_options(self):
        self.add_cmd('verify', msg='Verify the gyrogroup axioms of a table')
        self.add_args([_src_arg(), _config_arg()])

        self.add_cmd('info', msg='Summarize a gyrogroup')
        self.add_args([_src_arg(), _config_arg()])

        self.add_cmd('subgyro', aliases=['sub'],
                     msg='Enumerate subgyrogroups, or close a set')
        self.add_args([
            _src_arg(),
            {
                'name': 'l-only',
                'msg': 'Only list L-subgyrogroups',
                'type': bool,
                'default': False,
            },
            _set_arg(required=False),
            {
                'name': 'closure',
                'msg': 'Close --set under left or right addition',
                'type': str,
                'choices': ['left', 'right'],
                'default': None,
            },
            _config_arg(),
        ])

        self.add_cmd('cayley', msg='Build and export a Cayley graph')
        self.add_args([
            _src_arg(),
            _side_arg(),
            _set_arg(),
            {
                'name': 'format',
                'msg': 'The export format',
                'type': str,
                'choices': list(EXPORT_FORMATS),
                'default': 'dot',
            },
            {
                'name': 'labels',
                'msg': 'Label DOT edges with their generators',
                'type': bool,
                'default': False,
            },
            _out_arg('Write the export here instead of stdout'),
            _config_arg(),
        ])

        self.add_cmd('analyze', msg='Analyze a Cayley graph', aliases=['an'])
        self.add_args([_src_arg(), _side_arg(), _set_arg(), _config_arg()])

        self.add_cmd('theorems', msg='Check every theorem on one set',
                     aliases=['thm'])
        self.add_args([
            _src_arg(),
            _set_arg(),
            _out_arg('Dump the reports as YAML'),
            _config_arg(),
        ])

        self.add_cmd('search',
                     msg='Search generating sets for counterexamples')
        self.add_args([
            _src_arg(),
            {
                'name': 'max-set-size',
                'msg': 'Largest generating set enumerated',
                'type': int,
                'default': 3,
            },
            {
                'name': 'symmetric-only',
                'msg': 'Only enumerate symmetric sets',
                'type': bool,
                'default': False,
            },
            {
                'name': 'nworkers',
                'msg': 'Worker processes',
                'type': int,
                'default': None,
            },
            _out_arg('Dump the findings as YAML'),
            _config_arg(),
        ])

        self.add_cmd('table', msg='Rewrite a table file in normal form')
        self.add_args([
            _src_arg(),
            {
                'name': 'inline',
                'msg': 'Write gyrations as inline cycles',
                'type': bool,
                'default': False,
            },
            _out_arg('Write the table here instead of stdout'),
            _config_arg(),
        ])

    def _configure(self):
        if self.kwargs.get('config'):
            GyroManager.get_instance().load_config(self.kwargs['config'])

    def _group(self):
        self._configure()
        return load_gyrogroup(self.kwargs['src'])

    def _document(self):
        src = self.kwargs['src']
        if src.startswith(BUILTIN_PREFIX):
            return read_table_file(builtin_text(src[len(BUILTIN_PREFIX):]))
        return TableFile(src).read()

    def _gens(self, group):
        return GenSet.parse(group, self.kwargs['set'])

    @staticmethod
    def _emit(text, out):
        if out is None:
            sys.stdout.write(text)
        else:
            TextFile(out).save(text)

    @staticmethod
    def _table(rows, headers=()):
        ColorPrinter.print(tabulate(rows, headers=headers,
                                    tablefmt='plain'))

    def verify(self):
        self._configure()
        doc = self._document()
        report = verify_axioms(doc.table, doc.gyrations, name=doc.name)
        for viol in report.violations:
            ColorPrinter.print(f'  {viol}', Color.RED)
        label = doc.name or self.kwargs['src']
        ColorPrinter.verdict(f'{label} axioms', report.passed)
        if not report.passed:
            return EXIT_FAILED
        identities = check_identities(report.gyrogroup)
        for viol in identities.violations:
            ColorPrinter.print(f'  {viol}', Color.RED)
        ColorPrinter.verdict(f'{label} identities', identities.passed)
        return EXIT_OK if identities.passed else EXIT_FAILED

    def info(self):
        group = self._group()
        self._table([
            ['name', group.label()],
            ['order', group.order],
            ['identity', group.identity],
            ['group', _yes(group.is_group())],
        ])
        ColorPrinter.print('')
        self._table([[a, group.neg(a), group.element_order(a)]
                     for a in group.elements()],
                    headers=['element', 'inverse', 'order'])
        gyrations = group.distinct_gyrations()
        if gyrations:
            ColorPrinter.print('')
            self._table([[perm.to_cycles(), count]
                         for perm, count in gyrations],
                        headers=['gyration', 'pairs'])
        return EXIT_OK

    def subgyro(self):
        group = self._group()
        if self.kwargs['closure'] is not None:
            if not self.kwargs['set']:
                raise ArgParseError('--closure needs --set')
            closure = left_closure if self.kwargs['closure'] == 'left' \
                else right_closure
            found = closure(group, self._gens(group))
            ColorPrinter.print(_fmt_set(found))
            return EXIT_OK
        if self.kwargs['set']:
            elems = self._gens(group).members
            sub = is_subgyrogroup(group, elems)
            rows = [['subgyrogroup', _yes(sub)]]
            if not sub:
                rows.append(['witness', sub.witness])
                rows.append(['generated',
                             _fmt_set(generated_subgyrogroup(group, elems))])
            else:
                l_sub = is_l_subgyrogroup(group, elems)
                rows.append(['L-subgyrogroup', _yes(l_sub)])
                if l_sub:
                    parts = left_cosets(group, Subgyrogroup(elems, True))
                    rows.append(['index', parts.index])
                    rows.append(['cosets', ' '.join(
                        _fmt_set(block) for block in parts.blocks)])
                else:
                    rows.append(['witness', l_sub.witness])
            self._table(rows)
            return EXIT_OK
        subs = all_subgyrogroups(group, l_only=self.kwargs['l_only'])
        self._table([[len(sub), _fmt_set(sub.carrier), _yes(sub.is_l)]
                     for sub in subs], headers=['order', 'carrier', 'L'])
        return EXIT_OK

    def _graph(self, group):
        gens = self._gens(group)
        graph = build_cayley(group, gens, self.kwargs['side'])
        return gens, graph

    def cayley(self):
        group = self._group()
        gens, graph = self._graph(group)
        name = f'{graph.side}Cay({group.label()},{gens!r})'
        text = export_graph(graph, self.kwargs['format'],
                            labels=self.kwargs['labels'], name=name)
        self._emit(text, self.kwargs['out'])
        return EXIT_OK

    def analyze(self):
        group = self._group()
        gens, graph = self._graph(group)
        undirected = is_undirected(graph)
        comps = connected_components(graph)
        transitive = is_vertex_transitive(graph)
        rows = [
            ['graph', f'{graph.side}Cay({group.label()},{gens!r})'],
            ['arcs', graph.num_arcs()],
            ['undirected', undirected.holds],
        ]
        if not undirected:
            rows.append(['one_way_arc', undirected.witness])
        rows += [
            ['connected', len(comps) == 1],
            ['components', len(comps)],
            ['blocks', ' '.join(_fmt_set(comp) for comp in comps)],
            ['vertex_transitive', transitive.holds],
            ['cycle', is_cycle(graph)],
            ['perfect_matching', is_perfect_matching(graph)],
            ['symmetric', gens.is_symmetric],
        ]
        self._table(rows)
        ColorPrinter.print('')
        h_set = right_closure(group, gens) | {group.identity}
        conds = []
        for mode in GyrConditionMode:
            verdict = check_gyr_condition(group, gens, mode, h_set)
            conds.append([mode.name, verdict.holds,
                          '' if verdict else verdict.witness])
        self._table(conds, headers=['gyr condition', 'holds', 'witness'])
        return EXIT_OK

    def theorems(self):
        group = self._group()
        reports = check_all(group, self._gens(group))
        self._table([[rep.theorem_id.value,
                      'n/a' if rep.hypothesis is None else rep.hypothesis,
                      rep.conclusion, rep.consistent] for rep in reports],
                    headers=['theorem', 'hypothesis', 'conclusion',
                             'consistent'])
        if self.kwargs['out'] is not None:
            YamlFile(self.kwargs['out']).save(
                [rep.to_dict() for rep in reports])
        ok = all(rep.consistent for rep in reports)
        ColorPrinter.verdict('theorems', ok)
        return EXIT_OK if ok else EXIT_FAILED

    def search(self):
        group = self._group()
        if self.kwargs['nworkers'] is not None:
            GyroManager.get_instance().nworkers = self.kwargs['nworkers']
        cfg = SearchConfig(max_set_size=self.kwargs['max_set_size'],
                           symmetric_only=self.kwargs['symmetric_only'])
        result = search_counterexamples(group, cfg)
        self._table([
            ['checked', result.checked],
            ['violations', len(result.violations)],
            ['converse_failures', len(result.converse_failures)],
        ])
        for rep in result.violations:
            ColorPrinter.print(f'  {rep.theorem_id.value} '
                               f'{_fmt_set(rep.gen_set)}', Color.RED)
        for rep in result.converse_failures:
            ColorPrinter.print(f'  converse {rep.theorem_id.value} '
                               f'{_fmt_set(rep.gen_set)}', Color.YELLOW)
        if self.kwargs['out'] is not None:
            YamlFile(self.kwargs['out']).save(result.to_dict())
        ok = len(result.violations) == 0
        ColorPrinter.verdict('search', ok)
        return EXIT_OK if ok else EXIT_FAILED

    def table(self):
        group = self._group()
        text = format_table_file(group.table, group.gyrations, group.name,
                                 inline=self.kwargs['inline'])
        self._emit(text, self.kwargs['out'])
        return EXIT_OK


def cli_main(argv=None):
    """
    Run one command.

    :param argv: Arguments without the program name. Defaults to sys.argv.
    :return: The exit code
    """
    try:
        return GyroArgParse(args=argv, exit_on_fail=False).process_args()
    except VerificationError as err:
        ColorPrinter.error(str(err))
        return EXIT_FAILED
    except (ArgParseError, GyroError, OSError) as err:
        ColorPrinter.error(str(err))
        return USAGE_EXIT


def main():
    sys.exit(cli_main())
