"""
This module stores text (table files, DOT and JSON exports) in a file
"""
from gyro_cayley.serialize.serializer import Serializer
from gyro_cayley.util.errors import ParseError


class TextFile(Serializer):
    """
    Reads and writes a file verbatim. Newlines are not translated so
    exports stay byte-stable across platforms.
    """

    def load(self):
        with open(self.path, 'rb') as fp:
            raw = fp.read()
        try:
            return raw.decode('utf-8')
        except UnicodeDecodeError as err:
            prefix = raw[:err.start]
            line = prefix.count(b'\n') + 1
            column = err.start - prefix.rfind(b'\n')
            raise ParseError(f'{self.path} is not valid UTF-8 text',
                             line, column) from err

    def save(self, data):
        with open(self.path, 'w', encoding='utf-8', newline='') as fp:
            fp.write(data)
