"""
This module contains the builtin gyrogroups g8, g15 and g16 and resolves
gyrogroup sources given on the command line ('builtin:g8' or a path).
"""

import os
import pathlib
from functools import lru_cache
from gyro_cayley.serialize.table_file import TableFile, read_table_file
from gyro_cayley.algebra.gyrogroup import build_gyrogroup
from gyro_cayley.util.errors import DomainError

BUILTIN_NAMES = ('g8', 'g15', 'g16')
BUILTIN_PREFIX = 'builtin:'
DATA_DIR = pathlib.Path(__file__).parent / 'data'


def builtin_path(name):
    if name not in BUILTIN_NAMES:
        raise DomainError(f'unknown builtin {name}; choose one of '
                          f'{", ".join(BUILTIN_NAMES)}')
    return DATA_DIR / f'{name}.gyro'


def builtin_text(name):
    return builtin_path(name).read_text(encoding='utf-8')


@lru_cache(maxsize=None)
def load_builtin(name):
    """
    Load a builtin gyrogroup. The stored gyration table is cross-checked
    against the gyrator identity while verifying the axioms.

    :param name: One of BUILTIN_NAMES
    :return: Gyrogroup
    """
    doc = read_table_file(builtin_text(name))
    return build_gyrogroup(doc.table, doc.gyrations, name=name)


def load_gyrogroup(src):
    """
    Resolve a gyrogroup source.

    :param src: 'builtin:<name>' or the path of a table file
    :return: Gyrogroup
    """
    if src.startswith(BUILTIN_PREFIX):
        return load_builtin(src[len(BUILTIN_PREFIX):])
    if not os.path.exists(src):
        raise DomainError(f'{src} is neither a table file nor '
                          f'{BUILTIN_PREFIX}<name>')
    return TableFile(src).load()
