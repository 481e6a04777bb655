"""
The file-backed storage interface shared by table files, graph exports,
configuration and report dumps.
"""

from abc import ABC, abstractmethod


class Serializer(ABC):
    """
    One file on disk. Subclasses choose the format.
    """

    def __init__(self, path):
        """
        :param path: The file path. Nothing is opened until load or save.
        """
        self.path = path

    @abstractmethod
    def load(self):
        """
        :return: The decoded contents of self.path
        """

    @abstractmethod
    def save(self, data):
        """
        Overwrite self.path with data.

        :param data: The object to encode
        :return: None
        """
