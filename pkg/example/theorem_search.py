"""
Search every symmetric generating set of g16 with up to four elements
for theorem violations, using a pool of worker processes.
"""

from gyro_cayley.builtins import load_builtin
from gyro_cayley.gyro_manager import GyroManager
from gyro_cayley.theorem.theorem_lab import (SearchConfig,
                                             search_counterexamples)

if __name__ == '__main__':
    GyroManager.get_instance().update({'nworkers': 4, 'debug_search': True})
    result = search_counterexamples(
        load_builtin('g16'), SearchConfig(max_set_size=4,
                                          symmetric_only=True))
    print(f'checked {result.checked} sets, '
          f'{len(result.violations)} violations, '
          f'{len(result.converse_failures)} converse failures')
    for rep in result.converse_failures[:10]:
        print(rep.theorem_id.value, rep.gen_set)
