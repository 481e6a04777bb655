"""
This module reads and writes gyrogroup table files. A table file holds an
addition table and, optionally, a gyration table whose entries are
permutation names resolved through a legend:

    # comment
    gyrotable 8
    name g8
    [addition]
    0 1 2 ...
    [legend]
    A = (1 6)(2 5)
    [gyration]
    I I I ...

A gyration row containing ';' lists n inline cycle strings instead.
"""

import re
import string
from dataclasses import dataclass, field
from typing import Dict, Optional
from gyro_cayley.algebra.gyrogroup import (CayleyTable, GyrationTable,
                                           build_gyrogroup)
from gyro_cayley.algebra.permutation import (IDENTITY_NAMES, Permutation,
                                             parse_cycles)
from gyro_cayley.serialize.serializer import Serializer
from gyro_cayley.serialize.text_file import TextFile
from gyro_cayley.util.errors import ParseError

SECTIONS = ('addition', 'legend', 'gyration')
_WORD = re.compile(r'\S+')
_LEGEND = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$')
_SECTION = re.compile(r'^\[(\w*)\]$')
_NUMBER = re.compile(r'[0-9]+')


@dataclass
class TableDocument:
    """
    The parsed contents of a table file.
    """
    order: int
    table: CayleyTable
    gyrations: Optional[GyrationTable] = None
    name: Optional[str] = None
    legend: Dict[str, Permutation] = field(default_factory=dict)


def _words(line):
    """
    Whitespace-separated tokens with their 1-based columns
    """
    return [(m.group(0), m.start() + 1) for m in _WORD.finditer(line)]


def _strip_comment(line):
    pos = line.find('#')
    if pos >= 0:
        line = line[:pos]
    return line.rstrip()


class _TableParser:
    """
    A line-oriented parser. Rows are collected per section and resolved
    once the whole file is read, so the legend may follow the gyrations.
    """

    def __init__(self, text):
        self.text = text
        self.order = None
        self.name = None
        self.section = None
        self.seen = set()
        self.add_rows = []
        self.gyr_rows = []
        self.legend = {}
        self.last_line = 0

    def parse(self):
        for lineno, raw in enumerate(self.text.splitlines(), start=1):
            self.last_line = lineno
            line = _strip_comment(raw)
            if line.strip() == '':
                continue
            if self.order is None:
                self._header(line, lineno)
            else:
                self._line(line, lineno)
        if self.order is None:
            raise ParseError('missing "gyrotable <n>" header',
                             self.last_line + 1, 1)
        n = self.order
        if 'addition' not in self.seen:
            raise ParseError('missing [addition] section',
                             self.last_line + 1, 1)
        if len(self.add_rows) != n:
            raise ParseError(f'[addition] has {len(self.add_rows)} rows, '
                             f'expected {n}', self.last_line + 1, 1)
        table = CayleyTable(self.add_rows)
        gyrations = None
        if 'gyration' in self.seen:
            if len(self.gyr_rows) != n:
                raise ParseError(f'[gyration] has {len(self.gyr_rows)} '
                                 f'rows, expected {n}',
                                 self.last_line + 1, 1)
            gyrations = GyrationTable.from_permutations(
                [self._gyration_row(line, lineno)
                 for line, lineno in self.gyr_rows])
        return TableDocument(n, table, gyrations, self.name, self.legend)

    def _header(self, line, lineno):
        words = _words(line)
        if words[0][0] != 'gyrotable':
            raise ParseError('expected "gyrotable <n>"', lineno, words[0][1])
        if len(words) != 2 or not _NUMBER.fullmatch(words[1][0]):
            raise ParseError('expected "gyrotable <n>"', lineno,
                             words[-1][1])
        self.order = int(words[1][0])
        if self.order < 1:
            raise ParseError('the order must be positive', lineno,
                             words[1][1])

    def _line(self, line, lineno):
        stripped = line.strip()
        col = line.find(stripped[0]) + 1
        match = _SECTION.match(stripped)
        if match is not None:
            section = match.group(1)
            if section not in SECTIONS:
                raise ParseError(f'unknown section [{section}]', lineno, col)
            if section in self.seen:
                raise ParseError(f'repeated section [{section}]', lineno, col)
            self.seen.add(section)
            self.section = section
            return
        if self.section is None:
            words = _words(line)
            if words[0][0] == 'name' and len(words) == 2 and self.name is None:
                self.name = words[1][0]
                return
            raise ParseError(f'unexpected "{stripped}" before a section',
                             lineno, col)
        getattr(self, f'_{self.section}_line')(line, lineno)

    def _addition_line(self, line, lineno):
        n = self.order
        if len(self.add_rows) == n:
            raise ParseError(f'[addition] already has {n} rows', lineno, 1)
        words = _words(line)
        row = []
        for tok, col in words:
            if not _NUMBER.fullmatch(tok):
                raise ParseError(f'"{tok}" is not an element', lineno, col)
            val = int(tok)
            if val >= n:
                raise ParseError(f'entry {val} is not below {n}', lineno, col)
            row.append(val)
        if len(row) != n:
            raise ParseError(f'row has {len(row)} entries, expected {n}',
                             lineno, words[-1][1])
        self.add_rows.append(row)

    def _legend_line(self, line, lineno):
        stripped = line.strip()
        col = line.find(stripped[0]) + 1
        match = _LEGEND.match(stripped)
        if match is None:
            raise ParseError('expected "<Name> = <cycles>"', lineno, col)
        name = match.group(1)
        if name in IDENTITY_NAMES:
            raise ParseError(f'"{name}" is reserved for the identity',
                             lineno, col)
        if name in self.legend:
            raise ParseError(f'"{name}" is defined twice', lineno, col)
        self.legend[name] = parse_cycles(match.group(2), self.order, lineno,
                                         col + match.start(2))

    def _gyration_line(self, line, lineno):
        if len(self.gyr_rows) == self.order:
            raise ParseError(f'[gyration] already has {self.order} rows',
                             lineno, 1)
        self.gyr_rows.append((line, lineno))

    def _gyration_row(self, line, lineno):
        n = self.order
        if ';' in line:
            perms = []
            col = 1
            for cell in line.split(';'):
                perms.append(parse_cycles(cell, n, lineno, col))
                col += len(cell) + 1
        else:
            perms = [self._gyration_word(tok, lineno, col)
                     for tok, col in _words(line)]
        if len(perms) != n:
            raise ParseError(f'row has {len(perms)} entries, expected {n}',
                             lineno, 1)
        return perms

    def _gyration_word(self, tok, lineno, col):
        if tok.startswith('('):
            return parse_cycles(tok, self.order, lineno, col)
        if tok in self.legend:
            return self.legend[tok]
        if tok in IDENTITY_NAMES:
            return Permutation.identity(self.order)
        raise ParseError(f'unknown permutation name "{tok}"', lineno, col)


def read_table_file(text):
    """
    Parse a table file into a TableDocument.

    :param text: The file contents
    :return: TableDocument
    """
    return _TableParser(text).parse()


def parse_table_file(text):
    """
    Parse a table file.

    :param text: The file contents
    :return: (CayleyTable, GyrationTable or None)
    """
    doc = read_table_file(text)
    return doc.table, doc.gyrations


def legend_names(count):
    """
    A, B, ..., Z, then P26, P27, ...
    """
    letters = [c for c in string.ascii_uppercase if c != 'I']
    names = []
    for i in range(count):
        names.append(letters[i] if i < len(letters) else f'P{i}')
    return names


def _legend(gyrations):
    perms = []
    seen = set()
    n = gyrations.order
    for a in range(n):
        for b in range(n):
            perm = gyrations.gyr(a, b)
            if perm.is_identity() or perm in seen:
                continue
            seen.add(perm)
            perms.append(perm)
    return dict(zip(perms, legend_names(len(perms))))


def format_table_file(table, gyrations=None, name=None, inline=False):
    """
    Serialize tables in the normalized table file format. Nonidentity
    gyrations are named in order of first appearance.

    :param table: CayleyTable
    :param gyrations: Optional GyrationTable
    :param name: Optional gyrogroup label
    :param inline: Write gyrations as inline cycle strings, no legend
    :return: str
    """
    n = table.order
    width = len(str(n - 1))
    lines = [f'gyrotable {n}']
    if name is not None:
        lines.append(f'name {name}')
    lines += ['', '[addition]']
    for row in table.rows():
        lines.append(' '.join(str(x).rjust(width) for x in row))
    if gyrations is not None:
        rows = [[gyrations.gyr(a, b) for b in range(n)] for a in range(n)]
        if inline:
            lines += ['', '[gyration]']
            for row in rows:
                lines.append(' ; '.join(perm.to_cycles() for perm in row))
        else:
            legend = _legend(gyrations)
            if legend:
                lines += ['', '[legend]']
                for perm, label in legend.items():
                    lines.append(f'{label} = {perm.to_cycles()}')
            lines += ['', '[gyration]']
            width = max([1] + [len(label) for label in legend.values()])
            for row in rows:
                lines.append(' '.join(legend.get(perm, 'I').ljust(width)
                                      for perm in row).rstrip())
    return '\n'.join(lines) + '\n'


class TableFile(Serializer):
    """
    A table file on disk. load() verifies the axioms and returns a
    Gyrogroup; save() writes the normalized format.
    """

    def __init__(self, path, name=None, inline=False):
        super().__init__(path)
        self.name = name
        self.inline = inline

    def read(self):
        return read_table_file(TextFile(self.path).load())

    def load(self):
        doc = self.read()
        return build_gyrogroup(doc.table, doc.gyrations,
                               name=self.name or doc.name)

    def save(self, data):
        """
        :param data: Gyrogroup
        :return: None
        """
        TextFile(self.path).save(
            format_table_file(data.table, data.gyrations,
                              self.name or data.name, self.inline))
