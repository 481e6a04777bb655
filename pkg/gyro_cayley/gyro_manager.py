"""
This file contains properties which are globally accessible to all
gyro_cayley modules. This can be used to configure search bounds,
parallelism, and console output.
"""

from gyro_cayley.util.errors import DomainError, ParseError


class GyroManager:
    """
    A singleton which stores various properties that can be queried
    internally by gyro_cayley modules. This includes enumeration bounds
    and output management.
    """

    instance_ = None

    @staticmethod
    def get_instance():
        if GyroManager.instance_ is None:
            GyroManager.instance_ = GyroManager()
        return GyroManager.instance_

    def __init__(self):
        # Largest order accepted by all_subgyrogroups
        self.subgyro_max_order = 16
        # Largest number of generating sets a counterexample search may visit
        self.search_max_candidates = 10 ** 7
        self.nworkers = 1
        self.color_output = True
        self.hide_output = False
        self.debug_search = False
        self.debug_automorphism = False

    def load_config(self, path):
        """
        Override properties from a YAML mapping.

        :param path: Path to a YAML file
        :return: self
        """
        # pylint: disable=C0415
        import yaml
        from gyro_cayley.serialize.yaml_file import YamlFile
        # pylint: enable=C0415
        try:
            conf = YamlFile(path).load()
        except UnicodeDecodeError as err:
            raise ParseError(f'{path} is not valid UTF-8 text') from err
        except yaml.YAMLError as err:
            mark = getattr(err, 'problem_mark', None)
            if mark is None:
                raise ParseError(f'{path}: {err}') from err
            raise ParseError(f'{path}: {err.problem or err}',
                             mark.line + 1, mark.column + 1) from err
        if conf is None:
            return self
        if not isinstance(conf, dict):
            raise DomainError(f'{path} does not contain a YAML mapping')
        self.update(conf)
        return self

    def update(self, conf):
        """
        Override properties from a dict. Each value must have the type
        of the property's default.

        :param conf: Dict[property name, value]
        :return: self
        """
        for key, val in conf.items():
            if key not in vars(self):
                raise DomainError(f'{key} is not a gyro_cayley property')
            expected = type(getattr(self, key))
            if not isinstance(val, expected) or \
                    isinstance(val, bool) != (expected is bool):
                raise DomainError(f'{key} must be {expected.__name__}, '
                                  f'got {val!r}')
            setattr(self, key, val)
        return self

    def reset(self):
        """
        Restore the defaults. Mainly for tests.

        :return: self
        """
        self.__init__()
        return self
