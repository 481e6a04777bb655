"""
Write the cyclic group Z_n as a table file and check it with
verify_axioms. Every group is a gyrogroup with trivial gyrations.
"""

import sys
from gyro_cayley.algebra.gyrogroup import verify_axioms
from gyro_cayley.serialize.table_file import TableFile

n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
rows = [[(a + b) % n for b in range(n)] for a in range(n)]
report = verify_axioms(rows, name=f'z{n}')
print(f'z{n}: {"gyrogroup" if report.passed else "not a gyrogroup"}')
if report.passed:
    TableFile(f'z{n}.gyro').save(report.gyrogroup)
