"""
This module contains a permutation type on {0..n-1} and a parser
for cycle notation, e.g. "(1 7 5 10 6)(2 3 8 11 14)".
"""

import re
import string
from gyro_cayley.util.errors import DomainError, ParseError

IDENTITY_NAMES = ('I', '()', 'e', 'id')


class Permutation:
    """
    A bijection on {0..n-1}, stored as the tuple of images.
    """

    __slots__ = ('images',)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise DomainError(f'{images} is not a permutation')
        self.images = images

    @staticmethod
    def identity(n):
        return Permutation(range(n))

    @staticmethod
    def from_cycles(text, n):
        return parse_cycles(text, n)

    def __call__(self, x):
        return self.images[x]

    def __len__(self):
        return len(self.images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f'Permutation({self.to_cycles()}, n={len(self)})'

    def __str__(self):
        return self.to_cycles()

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.images))

    def compose(self, other):
        """
        The permutation x -> self(other(x))

        :param other: A Permutation of the same degree
        :return: Permutation
        """
        return Permutation(self.images[x] for x in other.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def image_of(self, points):
        return frozenset(self.images[x] for x in points)

    def stabilizes(self, points):
        """
        Whether the permutation maps a set of points onto itself.
        """
        points = frozenset(points)
        return self.image_of(points) == points

    def cycles(self):
        """
        The nontrivial cycles, each starting at its least point,
        ordered by least point.

        :return: List[Tuple[int]]
        """
        seen = set()
        cycles = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cycle) > 1:
                cycles.append(tuple(cycle))
        return cycles

    def to_cycles(self, sep=' '):
        cycles = self.cycles()
        if len(cycles) == 0:
            return 'I'
        return ''.join('(' + sep.join(str(x) for x in cycle) + ')'
                       for cycle in cycles)


_TOKEN = re.compile(r'\s*(\(|\)|[0-9]+|,|\S)')


def parse_cycles(text, n, line=None, column=1):
    """
    Parse a product of disjoint cycles. Points not mentioned are fixed.
    "I" and "()" denote the identity. Points are separated by spaces or
    commas. Enclosing braces are ignored.

    :param text: The cycle string
    :param n: The degree of the permutation
    :param line: Line number reported in errors
    :param column: Column of text[0] reported in errors
    :return: Permutation
    """
    stripped = text.strip()
    if stripped.startswith('{') and stripped.endswith('}'):
        stripped = stripped[1:-1].strip()
    if stripped == '':
        raise ParseError('empty cycle string', line, column)
    if stripped in IDENTITY_NAMES:
        return Permutation.identity(n)
    offset = column + text.find(stripped[0])
    images = list(range(n))
    seen = set()
    cycle = None
    pos = 0
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if match is None:
            break
        tok = match.group(1)
        col = offset + match.start(1)
        pos = match.end()
        if tok == '(':
            if cycle is not None:
                raise ParseError('nested "("', line, col)
            cycle = []
        elif tok == ')':
            if cycle is None:
                raise ParseError('unbalanced ")"', line, col)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
            cycle = None
        elif tok == ',':
            if cycle is None:
                raise ParseError('"," outside of a cycle', line, col)
        elif tok[0] in string.digits:
            if cycle is None:
                raise ParseError(f'point {tok} outside of a cycle', line, col)
            point = int(tok)
            if point >= n:
                raise ParseError(f'point {point} is not below {n}', line, col)
            if point in seen:
                raise ParseError(f'point {point} is repeated', line, col)
            seen.add(point)
            cycle.append(point)
        else:
            raise ParseError(f'unexpected character "{tok}"', line, col)
    if cycle is not None:
        raise ParseError('unclosed "("', line, offset + len(stripped))
    return Permutation(images)
