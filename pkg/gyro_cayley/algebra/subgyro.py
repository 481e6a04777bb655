"""
This module contains generating sets, left/right generated closures,
subgyrogroup and L-subgyrogroup tests, and left-coset partitions.
"""

from functools import cached_property
import numpy as np
from gyro_cayley.algebra.verdict import Verdict
from gyro_cayley.gyro_manager import GyroManager
from gyro_cayley.util.element_set import parse_element_set
from gyro_cayley.util.errors import DomainError, PreconditionError


class GenSet:
    """
    An ordered, duplicate-free subset of a gyrogroup. Used as the
    generating set S of Cayley graphs and closures.
    """

    def __init__(self, group, elements=()):
        """
        :param group: The ambient Gyrogroup
        :param elements: Iterable of element indices
        """
        elements = tuple(group.check_elements(elements))
        if len(set(elements)) != len(elements):
            dups = sorted({x for x in elements if elements.count(x) > 1})
            raise DomainError(f'generating set repeats {dups}')
        self.ambient = group
        self.elements = elements

    @staticmethod
    def parse(group, text):
        """
        Build from text such as '1,3' or '8-11'.
        """
        return GenSet(group, parse_element_set(text))

    @cached_property
    def members(self):
        return frozenset(self.elements)

    @cached_property
    def contains_identity(self):
        return self.ambient.identity in self.members

    @cached_property
    def is_symmetric(self):
        return all(self.ambient.inv[s] in self.members for s in self.elements)

    def require_no_identity(self):
        """
        Cayley graphs exclude the identity from S.
        """
        if self.contains_identity:
            raise DomainError(
                f'the identity {self.ambient.identity} may not be in a '
                f'generating set of a Cayley graph')
        return self

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.members

    def __eq__(self, other):
        return isinstance(other, GenSet) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return '{' + ','.join(str(x) for x in self.elements) + '}'


def _as_genset(group, gens):
    if isinstance(gens, GenSet):
        return gens
    return GenSet(group, gens)


def _closure(gens, step):
    found = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = step(s, x)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(found)


def left_closure(group, gens):
    """
    (S>: the least set containing S and closed under x -> s + x for s in S.
    The closure of the empty set is empty.

    :param group: Gyrogroup
    :param gens: GenSet or iterable of elements
    :return: frozenset
    """
    gens = _as_genset(group, gens).elements
    arr = group.add_arr
    return _closure(gens, lambda s, x: int(arr[s, x]))


def right_closure(group, gens):
    """
    The least set containing S and closed under x -> x + s for s in S.
    """
    gens = _as_genset(group, gens).elements
    arr = group.add_arr
    return _closure(gens, lambda s, x: int(arr[x, s]))


def _carrier(group, subset):
    subset = frozenset(group.check_elements(subset))
    if len(subset) == 0:
        raise DomainError('a subgyrogroup must be nonempty')
    return subset


def is_subgyrogroup(group, subset):
    """
    Whether H contains e, is closed under + and -, and
    gyr[a,b](H) = H for all a, b in H.

    :param group: Gyrogroup
    :param subset: Nonempty iterable of elements
    :return: Verdict. Witnesses: ('identity',), ('closure', a, b),
    ('inverse', a), ('gyration', a, b, x) with gyr[a,b](x) not in H.
    """
    carrier = _carrier(group, subset)
    if group.identity not in carrier:
        return Verdict(False, ('identity',))
    elems = sorted(carrier)
    arr = group.add_arr
    for a in elems:
        for b in elems:
            if int(arr[a, b]) not in carrier:
                return Verdict(False, ('closure', a, b))
    for a in elems:
        if group.inv[a] not in carrier:
            return Verdict(False, ('inverse', a))
    for a in elems:
        for b in elems:
            witness = _escape(group, carrier, elems, a, b)
            if witness is not None:
                return Verdict(False, ('gyration', a, b, witness))
    return Verdict(True)


def _escape(group, carrier, elems, a, b):
    """
    The least x in H with gyr[a,b](x) outside H
    """
    images = group.gyr_arr[a, b]
    for x in elems:
        if int(images[x]) not in carrier:
            return x
    return None


def is_l_subgyrogroup(group, subset):
    """
    Whether H is a subgyrogroup with gyr[a,h](H) = H for every a in G
    and h in H.

    :return: Verdict. Adds the witness ('l_gyration', a, h, x).
    """
    carrier = _carrier(group, subset)
    verdict = is_subgyrogroup(group, carrier)
    if not verdict:
        return verdict
    elems = sorted(carrier)
    for a in group.elements():
        for h in elems:
            witness = _escape(group, carrier, elems, a, h)
            if witness is not None:
                return Verdict(False, ('l_gyration', a, h, witness))
    return Verdict(True)


class Subgyrogroup:
    """
    A validated subgyrogroup carrier together with its L flag.
    """

    def __init__(self, carrier, is_l):
        self.carrier = frozenset(carrier)
        self.is_l = bool(is_l)

    @staticmethod
    def of(group, subset):
        """
        Validate a subset and flag it.

        :param group: Gyrogroup
        :param subset: Iterable of elements
        :return: Subgyrogroup
        """
        carrier = _carrier(group, subset)
        verdict = is_subgyrogroup(group, carrier)
        if not verdict:
            raise DomainError(f'{sorted(carrier)} is not a subgyrogroup: '
                              f'{verdict.witness}')
        return Subgyrogroup(carrier, is_l_subgyrogroup(group, carrier).holds)

    def sorted(self):
        return tuple(sorted(self.carrier))

    def __len__(self):
        return len(self.carrier)

    def __eq__(self, other):
        return (isinstance(other, Subgyrogroup) and
                self.carrier == other.carrier and self.is_l == other.is_l)

    def __hash__(self):
        return hash((self.carrier, self.is_l))

    def __repr__(self):
        flag = 'L' if self.is_l else 'non-L'
        return f'Subgyrogroup({list(self.sorted())}, {flag})'


class CosetPartition:
    """
    The left cosets g + H of an L-subgyrogroup H. Blocks are ordered by
    their representative, the least element of the block.
    """

    def __init__(self, subgroup, blocks):
        self.subgroup = subgroup
        self.blocks = blocks

    @property
    def index(self):
        """[G:H], the number of left cosets"""
        return len(self.blocks)

    @property
    def representatives(self):
        return [min(block) for block in self.blocks]

    def block_of(self, x):
        for block in self.blocks:
            if x in block:
                return block
        return None

    def sorted_blocks(self):
        return [tuple(sorted(block)) for block in self.blocks]

    def __repr__(self):
        return f'CosetPartition({self.sorted_blocks()})'


def left_coset_blocks(group, subset):
    """
    The family {g + H : g in G} without duplicates, ordered by least
    element. No partition property is assumed.

    :return: List[frozenset]
    """
    carrier = sorted(_carrier(group, subset))
    arr = group.add_arr
    blocks = {}
    for g in group.elements():
        block = frozenset(int(arr[g, h]) for h in carrier)
        blocks.setdefault(min(block), block)
    return [blocks[rep] for rep in sorted(blocks)]


def left_cosets(group, subgroup):
    """
    Partition G into the left cosets of an L-subgyrogroup.

    :param group: Gyrogroup
    :param subgroup: Subgyrogroup with is_l set
    :return: CosetPartition
    """
    if not isinstance(subgroup, Subgyrogroup):
        subgroup = Subgyrogroup.of(group, subgroup)
    if not subgroup.is_l:
        raise PreconditionError(
            f'{list(subgroup.sorted())} is not an L-subgyrogroup; its left '
            f'cosets need not partition {group.label()}')
    blocks = left_coset_blocks(group, subgroup.carrier)
    covered = set()
    for block in blocks:
        if len(block) != len(subgroup) or covered & block:
            raise PreconditionError(
                f'left cosets of {list(subgroup.sorted())} overlap at '
                f'{sorted(block)}')
        covered |= block
    if len(covered) != group.order:
        raise PreconditionError('left cosets do not cover the gyrogroup')
    return CosetPartition(subgroup, blocks)


def verify_lagrange(group, subgroup):
    """
    |H| divides |G| and [G:H] |H| = |G| on the computed partition.

    :return: bool
    """
    partition = left_cosets(group, subgroup)
    size = len(partition.subgroup)
    return (group.order % size == 0 and
            partition.index * size == group.order)


def generated_subgyrogroup(group, subset):
    """
    The least subgyrogroup containing a set: closure under e, +, -, and
    gyr[a,b] for a, b in the set.

    :return: frozenset
    """
    found = set(group.check_elements(subset))
    found.add(group.identity)
    while True:
        elems = np.array(sorted(found))
        new = set(group.inv_arr[elems].tolist())
        new.update(group.add_arr[np.ix_(elems, elems)].ravel().tolist())
        new.update(group.gyr_arr[np.ix_(elems, elems, elems)].ravel().tolist())
        if new <= found:
            return frozenset(found)
        found |= new


def all_subgyrogroups(group, l_only=False, max_order=None):
    """
    Every subgyrogroup of a gyrogroup, sorted by size and then
    lexicographically. Each subgyrogroup is reached by growing generated
    subgyrogroups from {e} one element at a time.

    :param group: Gyrogroup
    :param l_only: Keep only L-subgyrogroups
    :param max_order: Refuse gyrogroups above this order. Defaults to
    GyroManager.subgyro_max_order.
    :return: List[Subgyrogroup]
    """
    if max_order is None:
        max_order = GyroManager.get_instance().subgyro_max_order
    if group.order > max_order:
        raise DomainError(
            f'{group.label()} has order {group.order}, above the '
            f'subgyrogroup enumeration bound {max_order}; raise '
            f'subgyro_max_order to enumerate it')
    start = frozenset([group.identity])
    found = {start}
    queue = [start]
    while queue:
        carrier = queue.pop()
        for g in group.elements():
            if g in carrier:
                continue
            bigger = generated_subgyrogroup(group, carrier | {g})
            if bigger not in found:
                found.add(bigger)
                queue.append(bigger)
    subs = []
    for carrier in sorted(found, key=lambda c: (len(c), sorted(c))):
        is_l = is_l_subgyrogroup(group, carrier).holds
        if l_only and not is_l:
            continue
        subs.append(Subgyrogroup(carrier, is_l))
    return subs
