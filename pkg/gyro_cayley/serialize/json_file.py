"""
This module contains methods to serialize and deserialize data from
a JSON file.
"""
import json
from gyro_cayley.serialize.serializer import Serializer


class JsonFile(Serializer):
    """
    JSON files written in a canonical form: sorted keys, fixed
    separators and a trailing newline.
    """

    def load(self):
        with open(self.path, 'r', encoding='utf-8') as fp:
            return json.load(fp)

    def save(self, data):
        with open(self.path, 'w', encoding='utf-8', newline='') as fp:
            fp.write(JsonFile.dumps(data))

    @staticmethod
    def dumps(data):
        return json.dumps(data, sort_keys=True, separators=(',', ':')) + '\n'
