"""
This module represents finite gyrogroups by their addition (Cayley) and
gyration tables. Elements are the dense indices 0..n-1.

A gyrogroup is only ever built by verify_axioms, which checks:
    (i) a unique two-sided identity
    (ii) a unique two-sided inverse for each element
    (iii) gyrations (derived through the gyrator identity
        gyr[a,b]c = -(a+b) + (a + (b + c)) and cross-checked when supplied)
    (iv) every gyration is an automorphism
    (v) the left gyroassociative law
    (vi) the left loop property
"""

import numbers
import numpy as np
from gyro_cayley.algebra.permutation import Permutation
from gyro_cayley.algebra.verdict import VerificationReport, Violation
from gyro_cayley.util.errors import (DomainError, StructuralError,
                                     VerificationError)


def _first(mask):
    """
    The lexicographically least index where mask is True.

    :param mask: A boolean ndarray
    :return: Tuple[int] or None
    """
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(x) for x in hits[0])


def _readonly(arr):
    arr = np.array(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class CayleyTable:
    """
    The addition table of a finite groupoid. entry(a, b) = a + b.
    """

    def __init__(self, entries):
        """
        :param entries: An n x n nested sequence (or ndarray) of indices
        """
        try:
            arr = np.array(entries, dtype=np.int64)
        except (TypeError, ValueError) as err:
            raise DomainError(f'addition table is not rectangular: {err}') \
                from err
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.size == 0:
            raise DomainError(
                f'addition table must be n x n, got shape {arr.shape}')
        n = arr.shape[0]
        bad = _first((arr < 0) | (arr >= n))
        if bad is not None:
            raise DomainError(
                f'entry {arr[bad]} at row {bad[0]} column {bad[1]} '
                f'is not in [0, {n})')
        self.entries = _readonly(arr)

    @property
    def order(self):
        return self.entries.shape[0]

    def entry(self, a, b):
        return int(self.entries[a, b])

    def rows(self):
        return self.entries.tolist()

    def latin_violation(self):
        """
        Check that every row and every column is a permutation.

        :return: The first Violation (rows before columns) or None.
        The witness is (row, column) of the first repeated entry.
        """
        n = self.order
        ident = np.arange(n)
        bad_rows = ~(np.sort(self.entries, axis=1) == ident).all(axis=1)
        if bad_rows.any():
            row = int(np.argmax(bad_rows))
            return Violation('latin_row',
                             (row, self._first_repeat(self.entries[row])))
        bad_cols = ~(np.sort(self.entries, axis=0) ==
                     ident[:, None]).all(axis=0)
        if bad_cols.any():
            col = int(np.argmax(bad_cols))
            return Violation('latin_column',
                             (self._first_repeat(self.entries[:, col]), col))
        return None

    @staticmethod
    def _first_repeat(line):
        seen = set()
        for i, x in enumerate(line.tolist()):
            if x in seen:
                return i
            seen.add(x)
        return None

    def __eq__(self, other):
        return (isinstance(other, CayleyTable) and
                np.array_equal(self.entries, other.entries))

    def __hash__(self):
        return hash(self.entries.tobytes())

    def __repr__(self):
        return f'CayleyTable(order={self.order})'


class GyrationTable:
    """
    The gyrations of a groupoid. images[a, b, c] = gyr[a,b](c).
    """

    def __init__(self, images):
        arr = np.array(images, dtype=np.int64)
        if arr.ndim != 3 or len(set(arr.shape)) != 1:
            raise DomainError(
                f'gyration table must be n x n x n, got shape {arr.shape}')
        n = arr.shape[0]
        bad = _first((arr < 0) | (arr >= n))
        if bad is not None:
            raise DomainError(f'gyr[{bad[0]},{bad[1]}] sends {bad[2]} to '
                              f'{arr[bad]}, which is not in [0, {n})')
        self.images = _readonly(arr)

    @staticmethod
    def from_permutations(perms):
        """
        Build from an n x n nested sequence of Permutation.
        """
        return GyrationTable([[perm.images for perm in row] for row in perms])

    @property
    def order(self):
        return self.images.shape[0]

    def gyr(self, a, b):
        return Permutation(self.images[a, b].tolist())

    def apply(self, a, b, c):
        return int(self.images[a, b, c])

    def first_mismatch(self, other):
        """
        The least (a, b, c) where the two tables disagree, or None.
        """
        return _first(self.images != other.images)

    def __eq__(self, other):
        return (isinstance(other, GyrationTable) and
                np.array_equal(self.images, other.images))

    def __hash__(self):
        return hash(self.images.tobytes())

    def __repr__(self):
        return f'GyrationTable(order={self.order})'


class Gyrogroup:
    """
    A finite gyrogroup. Immutable once built by verify_axioms and safe to
    share between readers.
    """

    def __init__(self, table, gyrations, identity, inv, name=None):
        """
        Not meant to be called directly: use verify_axioms or
        build_gyrogroup, which validate the tables first.

        :param table: CayleyTable
        :param gyrations: GyrationTable consistent with table
        :param identity: The identity element
        :param inv: Sequence mapping a to -a
        :param name: Optional label, e.g. 'g15'
        """
        self.table = table
        self.gyrations = gyrations
        self.identity = int(identity)
        self.inv = tuple(int(x) for x in inv)
        self.name = name
        # Raw arrays for vectorized checks
        self.add_arr = table.entries
        self.inv_arr = _readonly(self.inv)
        self.gyr_arr = gyrations.images

    @property
    def order(self):
        return self.table.order

    def elements(self):
        return range(self.order)

    def check_element(self, a):
        if (isinstance(a, bool) or
                not isinstance(a, (numbers.Integral, np.integer)) or
                not 0 <= a < self.order):
            raise DomainError(
                f'{a!r} is not an element of {self.label()} '
                f'(indices 0..{self.order - 1})')
        return int(a)

    def check_elements(self, elems):
        return [self.check_element(a) for a in elems]

    def label(self):
        return self.name if self.name is not None else f'G{self.order}'

    def add(self, a, b):
        """a + b"""
        a = self.check_element(a)
        b = self.check_element(b)
        return int(self.add_arr[a, b])

    def neg(self, a):
        """-a, the unique two-sided inverse"""
        return self.inv[self.check_element(a)]

    def gyr_apply(self, a, b, c):
        """gyr[a,b](c)"""
        a, b, c = self.check_elements((a, b, c))
        return int(self.gyr_arr[a, b, c])

    def gyr(self, a, b):
        a, b = self.check_elements((a, b))
        return self.gyrations.gyr(a, b)

    def coadd(self, a, b):
        """The coaddition a [+] b = a + gyr[a,-b](b)"""
        a, b = self.check_elements((a, b))
        return int(self.add_arr[a, self.gyr_arr[a, self.inv[b], b]])

    def cosub(self, a, b):
        """a [-] b = a [+] (-b). Solves x + b = a."""
        return self.coadd(a, self.neg(b))

    def left_nested_product(self, seq):
        """
        s_n + (... + (s_2 + s_1)...), with seq given as written:
        [x0, x1, ..., xk] -> x0 + (x1 + (... + xk))

        :param seq: A nonempty sequence of elements
        :return: int
        """
        seq = self.check_elements(seq)
        if len(seq) == 0:
            raise DomainError('nested product of an empty sequence')
        acc = seq[-1]
        for x in reversed(seq[:-1]):
            acc = int(self.add_arr[x, acc])
        return acc

    def right_nested_product(self, seq):
        """
        [x0, x1, ..., xk] -> ((x0 + x1) + ...) + xk
        """
        seq = self.check_elements(seq)
        if len(seq) == 0:
            raise DomainError('nested product of an empty sequence')
        acc = seq[0]
        for x in seq[1:]:
            acc = int(self.add_arr[acc, x])
        return acc

    def element_order(self, a):
        """
        Least k >= 1 such that the k-fold left-nested sum of a is e.
        """
        a = self.check_element(a)
        x = a
        k = 1
        while x != self.identity:
            x = int(self.add_arr[a, x])
            k += 1
        return k

    def is_group(self):
        return bool((self.gyr_arr == np.arange(self.order)).all())

    def distinct_gyrations(self):
        """
        The nonidentity gyrations in order of first appearance
        (row-major over (a, b)).

        :return: List of (Permutation, number of pairs realizing it)
        """
        counts = {}
        for a in self.elements():
            for b in self.elements():
                perm = self.gyrations.gyr(a, b)
                if perm.is_identity():
                    continue
                counts[perm] = counts.get(perm, 0) + 1
        return list(counts.items())

    def __repr__(self):
        return f'Gyrogroup({self.label()}, order={self.order})'


def _find_identity(arr):
    n = arr.shape[0]
    ident = np.arange(n)
    left = (arr == ident[None, :]).all(axis=1)
    right = (arr == ident[:, None]).all(axis=0)
    both = np.flatnonzero(left & right)
    if len(both) == 0:
        return None
    return int(both[0])


def _find_inverses(arr, e):
    """
    :return: (inverse list, first element lacking a two-sided inverse)
    """
    n = arr.shape[0]
    inv = [0] * n
    for a in range(n):
        right = np.flatnonzero(arr[a] == e)
        if len(right) != 1 or arr[right[0], a] != e:
            return None, a
        inv[a] = int(right[0])
    return inv, None


def _gyrator(arr, inv):
    n = arr.shape[0]
    idx = np.arange(n)
    inv = np.asarray(inv)
    a_bc = arr[idx[:, None, None], arr[None, :, :]]
    return arr[inv[arr][:, :, None], a_bc]


def derive_gyrations(table):
    """
    Compute gyr[a,b]c = -(a+b) + (a + (b + c)) for all a, b, c.
    This does not check that the results are automorphisms.

    :param table: CayleyTable (or n x n nested sequence)
    :return: GyrationTable
    """
    if not isinstance(table, CayleyTable):
        table = CayleyTable(table)
    arr = table.entries
    e = _find_identity(arr)
    if e is None:
        raise StructuralError('the table has no two-sided identity')
    inv, missing = _find_inverses(arr, e)
    if inv is None:
        raise StructuralError(
            f'element {missing} has no unique two-sided inverse', missing)
    return GyrationTable(_gyrator(arr, inv))


def verify_axioms(table, gyrations=None, name=None):
    """
    Verify the gyrogroup axioms exhaustively.

    :param table: CayleyTable (or n x n nested sequence)
    :param gyrations: Optional GyrationTable to cross-check against the
    gyrator identity
    :param name: Label of the resulting Gyrogroup
    :return: VerificationReport. On success report.gyrogroup is set.
    """
    if not isinstance(table, CayleyTable):
        table = CayleyTable(table)
    report = VerificationReport()
    latin = table.latin_violation()
    if latin is not None:
        report.violations.append(latin)
        return report
    arr = table.entries
    n = table.order

    # (i) identity
    e = _find_identity(arr)
    if e is None:
        report.violations.append(Violation('identity', ()))
        return report

    # (ii) inverses
    inv, missing = _find_inverses(arr, e)
    if inv is None:
        report.violations.append(Violation('inverse', (missing,)))
        return report

    # (iii) gyrations
    derived = GyrationTable(_gyrator(arr, inv))
    if gyrations is not None:
        if gyrations.order != n:
            raise DomainError(f'gyration table has order {gyrations.order}, '
                              f'addition table has order {n}')
        mismatch = derived.first_mismatch(gyrations)
        if mismatch is not None:
            report.violations.append(Violation('gyration_mismatch', mismatch))
    gy = derived.images

    # (iv) automorphisms
    ident = np.arange(n)
    nonbij = _first(~(np.sort(gy, axis=2) == ident).all(axis=2))
    if nonbij is not None:
        report.violations.append(Violation('gyration_bijective', nonbij))
    for a in range(n):
        lhs = gy[a][:, arr]
        rhs = arr[gy[a][:, :, None], gy[a][:, None, :]]
        bad = _first(lhs != rhs)
        if bad is not None:
            report.violations.append(Violation('automorphism', (a,) + bad))
            break

    # (v) left gyroassociative law
    lhs = arr[ident[:, None, None], arr[None, :, :]]
    rhs = arr[arr[:, :, None], gy]
    bad = _first(lhs != rhs)
    if bad is not None:
        report.violations.append(Violation('left_gyroassociative', bad))

    # (vi) left loop property
    loop = gy[arr, ident[None, :]]
    bad = _first((loop != gy).any(axis=2))
    if bad is not None:
        report.violations.append(Violation('left_loop', bad))

    if report.passed:
        report.gyrogroup = Gyrogroup(table, derived, e, inv, name=name)
    return report


def build_gyrogroup(table, gyrations=None, name=None):
    """
    verify_axioms, raising instead of returning a failed report.

    :return: Gyrogroup
    """
    report = verify_axioms(table, gyrations, name=name)
    if not report.passed:
        viols = ', '.join(str(viol) for viol in report.violations)
        raise VerificationError(
            f'{name or "table"} is not a gyrogroup: {viols}', report)
    return report.gyrogroup


IDENTITY_CHECKS = (
    'general_left_cancellation',
    'left_cancellation',
    'right_cancellation_1',
    'right_cancellation_2',
    'right_gyroassociative',
    'gyration_inverse',
)


def check_identities(group):
    """
    Check the six standard gyrogroup identities over all tuples:
        (1) a+b = a+c implies b = c
        (2) -a + (a + b) = b
        (3) (a - b) [+] b = a
        (4) (a [-] b) + b = a
        (5) (a + b) + c = a + (b + gyr[b,a]c)
        (6) gyr[a,b](-c) = -gyr[a,b]c

    :param group: Gyrogroup
    :return: VerificationReport with the first counterexample per identity
    """
    arr = group.add_arr
    inv = group.inv_arr
    gy = group.gyr_arr
    n = group.order
    idx = np.arange(n)
    a_grid, b_grid = np.meshgrid(idx, idx, indexing='ij')

    def coadd(x, y):
        return arr[x, gy[x, inv[y], y]]

    bad = {}
    bad['general_left_cancellation'] = (
        (arr[:, :, None] == arr[:, None, :]) & ~np.eye(n, dtype=bool)[None])
    bad['left_cancellation'] = arr[inv[:, None], arr] != b_grid
    bad['right_cancellation_1'] = coadd(arr[a_grid, inv[b_grid]],
                                        b_grid) != a_grid
    bad['right_cancellation_2'] = arr[coadd(a_grid, inv[b_grid]),
                                      b_grid] != a_grid
    inner = arr[idx[None, :, None], gy.transpose(1, 0, 2)]
    bad['right_gyroassociative'] = (arr[arr[:, :, None], idx[None, None, :]] !=
                                    arr[idx[:, None, None], inner])
    bad['gyration_inverse'] = gy[:, :, inv] != inv[gy]

    report = VerificationReport(gyrogroup=group)
    for name in IDENTITY_CHECKS:
        witness = _first(bad[name])
        if witness is not None:
            report.violations.append(Violation(name, witness))
    return report
