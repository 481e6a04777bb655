"""
This module contains methods to serialize and deserialize data from
a human-readable YAML file. Used for configuration and report dumps.
"""
import yaml
from gyro_cayley.serialize.serializer import Serializer


class YamlFile(Serializer):
    """
    Loads with the safe loader and dumps plain data in insertion order.
    """

    def load(self):
        with open(self.path, 'r', encoding='utf-8') as fp:
            return yaml.safe_load(fp)

    def save(self, data):
        with open(self.path, 'w', encoding='utf-8') as fp:
            yaml.safe_dump(data, fp, sort_keys=False)
