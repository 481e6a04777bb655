"""Import all modules"""
from gyro_cayley.gyro_manager import *
from gyro_cayley.util.errors import *
from gyro_cayley.util.logging import *
from gyro_cayley.algebra.permutation import *
from gyro_cayley.algebra.verdict import *
from gyro_cayley.algebra.gyrogroup import *
from gyro_cayley.algebra.subgyro import *
from gyro_cayley.graph.cayley_graph import *
from gyro_cayley.graph.graph_analysis import *
from gyro_cayley.theorem.theorem_lab import *
from gyro_cayley.builtins import *
