"""
This module contains methods for parsing element sets written on the
command line, e.g. "1,3", "8-11", or "1,8-9,12".
"""

import re
from gyro_cayley.util.errors import ParseError

_RANGE = re.compile(r'^([0-9]+)(?:-([0-9]+))?$')


def parse_element_set(text):
    """
    Expand an element set. Entries are separated by commas and may be
    inclusive ranges A-B. Order is preserved, duplicates are kept so the
    caller can reject them.

    :param text: The element set string. None or '' is the empty set.
    :return: List[int]
    """
    if text is None or str(text).strip() == '':
        return []
    if isinstance(text, int):
        return [text]
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    elems = []
    col = 1
    for rng in str(text).split(','):
        _expand_range(elems, rng, col)
        col += len(rng) + 1
    return elems


def _expand_range(elems, rng, col):
    """
    Expand a range.
    The range has notation: A-B or A

    :param elems: the elements found so far
    :param rng: the range text
    :param col: column of rng in the original text
    :return: None
    """
    tok = rng.strip()
    if len(tok) == 0:
        raise ParseError('empty entry in element set', column=col)
    match = _RANGE.match(tok)
    if match is None:
        raise ParseError(f'"{tok}" is not an element or a range A-B',
                         column=col)
    low = int(match.group(1))
    if match.group(2) is None:
        elems.append(low)
        return
    high = int(match.group(2))
    if high < low:
        raise ParseError(f'range {tok} is empty', column=col)
    elems += list(range(low, high + 1))


def format_element_set(elems):
    return ','.join(str(x) for x in elems)
