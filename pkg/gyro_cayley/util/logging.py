"""
This module contains methods for printing colored messages to the console.
"""

import sys
from enum import Enum
from gyro_cayley.gyro_manager import GyroManager


class Color(Enum):
    BLACK = "\033[30m{}\033[0m"
    RED = "\033[31m{}\033[0m"
    GREEN = "\033[32m{}\033[0m"
    YELLOW = "\033[33m{}\033[0m"
    BLUE = "\033[34m{}\033[0m"
    MAGENTA = "\033[35m{}\033[0m"
    CYAN = "\033[36m{}\033[0m"
    WHITE = "\033[37m{}\033[0m"
    BRIGHT_BLACK = "\033[90m{}\033[0m"
    BRIGHT_RED = "\033[91m{}\033[0m"
    BRIGHT_GREEN = "\033[92m{}\033[0m"


class ColorPrinter:
    """
    Prints messages unless output is hidden by the GyroManager.
    """

    @staticmethod
    def print(msg, color=None):
        gyro = GyroManager.get_instance()
        if gyro.hide_output:
            return
        if color is not None and gyro.color_output:
            print(color.value.format(msg))
        else:
            print(msg)

    @staticmethod
    def error(msg):
        """
        Print a message to stderr. Errors are never hidden.
        """
        if GyroManager.get_instance().color_output:
            msg = Color.RED.value.format(msg)
        print(msg, file=sys.stderr)

    @staticmethod
    def debug(flag, msg):
        """
        Print a message only when a GyroManager debug flag is set.

        :param flag: The name of the debug property, e.g. 'debug_search'
        :param msg: The message to print
        :return: None
        """
        if getattr(GyroManager.get_instance(), flag, False):
            ColorPrinter.print(msg, Color.BRIGHT_BLACK)

    @staticmethod
    def verdict(label, ok):
        ColorPrinter.print(f'{label}: {"PASSED" if ok else "FAILED"}',
                           Color.GREEN if ok else Color.RED)
