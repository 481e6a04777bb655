"""
This module contains a menu-based argument parser. A derived class
declares its commands in define_options() and implements one method per
command, named after the command.
"""

import sys
import os
from abc import ABC, abstractmethod
import shlex
import yaml
from tabulate import tabulate
from gyro_cayley.util.errors import ArgParseError

USAGE_EXIT = 2


class PatternTree:
    """
    A prefix tree of menu names. 'repo add' nests 'add' under 'repo'.
    """

    def __init__(self):
        self.pattern = {}

    def add_menu(self, menu):
        if len(menu['name_toks']) == 0:
            self.pattern['__menu'] = menu
            return
        for _, alias_toks in menu['aliases']:
            self._add_menu(menu, self.pattern, alias_toks)

    def _add_menu(self, menu, pattern, toks):
        tok = toks[0]
        if tok not in pattern:
            pattern[tok] = {}
        if len(toks) == 1:
            pattern[tok]['__menu'] = menu
            return
        self._add_menu(menu, pattern[tok], toks[1:])

    def get_default_menu(self):
        return self.pattern.get('__menu')

    def match_pattern(self, toks):
        """
        The deepest menu whose name is a prefix of toks.

        :return: (number of tokens consumed, pattern node or None)
        """
        return self._match_pattern(toks, self.pattern, 0, (0, None))

    def _match_pattern(self, toks, pattern, depth, last_match):
        if len(toks) == 0:
            return last_match
        tok = toks[0]
        if tok in pattern:
            if '__menu' in pattern[tok]:
                last_match = (depth + 1, pattern[tok])
            last_match = self._match_pattern(
                toks[1:], pattern[tok], depth + 1, last_match)
        return last_match


class ArgParse(ABC):
    """
    A class for parsing command line arguments.
        Parsed menu name stored in self.menu_name
        Parsed menu arguments stored in self.kwargs
    """

    def __init__(self, args=None, exit_on_fail=True):
        """
        :param args: Unparsed CLI arguments. Either a string or a list.
        :param exit_on_fail: Exit with status 2 on a usage error instead
        of raising ArgParseError.
        """
        if args is None:
            args = sys.argv[1:]
        elif isinstance(args, str):
            args = shlex.split(args)
        self.binary_name = os.path.basename(sys.argv[0])
        self.args = list(args)
        self.exit_on_fail = exit_on_fail
        self.menus = PatternTree()
        self.needed_help = False
        self.menu = None
        self.menu_name = None
        self.kwargs = {}
        self.real_kwargs = {}
        self.define_options()
        self._parse()

    @abstractmethod
    def define_options(self):
        """
        User-defined options menu

        :return: None
        """

    def process_args(self):
        """
        Call the method named after the parsed menu, e.g. 'verify' for
        the menu 'verify' and 'main_menu' for the unnamed menu.

        :return: The method's exit code (0 after printing help)
        """
        if self.needed_help:
            return 0
        func_name = self.menu_name.replace(' ', '_').replace('-', '_')
        if func_name == '':
            func_name = 'main_menu'
        code = getattr(self, func_name)()
        return 0 if code is None else code

    @staticmethod
    def _get_alias(name):
        if name is not None:
            name_toks = name.split()
            return (' '.join(name_toks), name_toks)
        return ('', [])

    def add_cmd(self, name=None, msg=None, aliases=None):
        """
        A command is a menu that can be executed.

        :param name: The name that triggers the command. Spaces indicate
        nesting.
        :param msg: One-line description printed in help
        :param aliases: Alternative names for this command
        :return: None
        """
        self.add_menu(name, msg, aliases, is_cmd=True)

    def add_menu(self, name=None, msg=None, aliases=None, is_cmd=False):
        name_str, name_toks = self._get_alias(name)
        full_aliases = [(name_str, name_toks)]
        for alias in aliases or []:
            full_aliases.append(self._get_alias(alias))
        menu = {
            'name_str': name_str,
            'name_toks': name_toks,
            'msg': msg,
            'num_required': 0,
            'pos_opts': [],
            'kw_opts': {},
            'is_cmd': is_cmd,
            'aliases': full_aliases
        }
        self.menus.add_menu(menu)
        self.menu = menu

    @staticmethod
    def _default_arg_params(args):
        for arg in args:
            if 'name' not in arg:
                raise ArgParseError('Name is a required argument')
            arg.setdefault('type', str)
            arg.setdefault('choices', [])
            arg.setdefault('default', None)
            arg.setdefault('required', False)
            arg.setdefault('pos', False)
            arg.setdefault('msg', None)
            arg.setdefault('class', None)

    def add_args(self, args):
        """
        Add arguments to the current menu

        menu arguments have the following parameters:
            name: The name of the argument. Dashes become underscores.
            type: The arg type (e.g., str, int, bool). Default str.
            choices: Available choices for the menu option. Default None.
            pos: Whether the argument is positional. Default false.
            required: Whether a positional argument is required.
            default: The default value of the argument. Default None.
            msg: The help text
            class: The category of option in help
            aliases: Alternative names for keyword arguments

        :param args: A list of argument dicts
        :return: None
        """
        for arg in args:
            arg['name'] = arg['name'].replace('-', '_')
        self._default_arg_params(args)
        for rank, arg in enumerate(args):
            arg.setdefault('rank', rank)
            if arg['pos']:
                self.menu['pos_opts'].append(arg)
                if arg['required']:
                    self.menu['num_required'] += 1
            else:
                self.menu['kw_opts'][arg['name']] = arg
                for alias in arg.get('aliases', []):
                    self.menu['kw_opts'][alias.replace('-', '_')] = arg
        help_opt = {
            'name': 'help',
            'type': bool,
            'msg': 'Print help menu',
            'default': False,
            'aliases': ['h'],
        }
        self._default_arg_params([help_opt])
        help_opt['rank'] = len(args)
        self.menu['kw_opts']['help'] = help_opt
        self.menu['kw_opts']['h'] = help_opt

    def _parse(self):
        """
        Parse the CLI arguments into self.menu and self.kwargs.

        :return: None
        """
        self._parse_menu()
        default_args = self.default_kwargs(
            list(self.menu['kw_opts'].values()) + self.menu['pos_opts'])
        default_args.update(self.kwargs)
        self.real_kwargs = self.kwargs
        self.kwargs = default_args

    @staticmethod
    def default_kwargs(menu_args):
        """
        Pack the kwargs dictionary with default values for missing entries.

        :param menu_args: The menu argument list
        :return: dict
        """
        return {arg['name']: arg['default'] for arg in menu_args
                if arg['name'] != 'help'}

    def _parse_menu(self):
        depth, menus = self.menus.match_pattern(self.args)
        if menus is None:
            self.menu = self.menus.get_default_menu()
        else:
            self.menu = menus['__menu']
            self.args = self.args[depth:]
        if self.menu is None or not self.menu['is_cmd']:
            if len(self.args) and self.args[0] in ('-h', '--help'):
                self._print_help(matches=[])
                self.menu = {'name_str': '', 'kw_opts': {}, 'pos_opts': []}
                self.menu_name = ''
                return
            if len(self.args) == 0:
                msg = 'no command given'
            else:
                msg = f'{self.args[0]} is not a command'
            self._print_error(msg, matches=[])
        self.menu_name = self.menu['name_str']
        i = self._parse_pos_args()
        self._parse_kw_args(i)
        if self.kwargs.get('help'):
            self._print_help()
            return
        for name, opt in self.menu['kw_opts'].items():
            if name == opt['name'] and opt['required'] and \
                    name not in self.kwargs:
                self._print_menu_error(
                    f'--{name.replace("_", "-")} was required, but not '
                    f'defined')

    def _parse_pos_args(self):
        i = 0
        args = self.args
        menu = self.menu
        while i < len(menu['pos_opts']):
            opt = menu['pos_opts'][i]
            if i >= len(args) or self._is_kw_token(args[i]):
                if i < menu['num_required'] and \
                        not self._asks_help(args[i:]):
                    self._print_menu_error(
                        f'{opt["name"]} was required, but not defined')
                break
            self._set_opt(opt, self._convert_opt(opt, args[i]))
            i += 1
        return i

    @staticmethod
    def _asks_help(args):
        return any(arg in ('-h', '--help') for arg in args)

    @staticmethod
    def _is_kw_token(tok):
        return tok.startswith('-') and not tok[1:2].isdigit()

    def _parse_kw_args(self, i):
        """
        Parse key-word arguments: --name=value, --name value, --flag,
        --no-flag, -h.

        :param i: The index in self.args where keyword arguments start
        :return: None
        """
        args = self.args
        kw_opts = self.menu['kw_opts']
        while i < len(args):
            tok = args[i]
            if not self._is_kw_token(tok):
                self._print_menu_error(f'unexpected argument {tok}')
            opt_val = None
            if '=' in tok:
                tok, opt_val = tok.split('=', 1)
            opt_name = self._get_opt_name(tok)
            negated = False
            if opt_name not in kw_opts and opt_name.startswith('no_'):
                opt_name = opt_name[3:]
                negated = True
            if opt_name not in kw_opts:
                self._print_menu_error(
                    f'{tok} is not a valid key-word argument')
            opt = kw_opts[opt_name]
            if opt['type'] is bool:
                if opt_val is None:
                    opt_val = not negated
            elif opt_val is None:
                if i + 1 >= len(args):
                    self._print_menu_error(
                        f'{tok} was not given a value, but requires one')
                i += 1
                opt_val = args[i]
            self._set_opt(opt, self._convert_opt(opt, opt_val))
            i += 1

    @staticmethod
    def _get_opt_name(opt_name):
        """
        '--l-only' -> 'l_only'
        """
        return opt_name.lstrip('-+').replace('-', '_')

    def _set_opt(self, opt, opt_val):
        self.kwargs[opt['name']] = opt_val

    def _convert_opt(self, opt, arg):
        opt_name = opt['name']
        opt_type = opt['type']
        if opt_type is bool and isinstance(arg, str):
            arg = yaml.safe_load(arg)
            if not isinstance(arg, bool):
                self._invalid_type(opt_name, opt_type)
        elif opt_type is not None and not isinstance(arg, opt_type):
            try:
                arg = opt_type(arg)
            except (TypeError, ValueError):
                self._invalid_type(opt_name, opt_type)
        if len(opt['choices']) and arg not in opt['choices']:
            self._print_menu_error(f'{opt_name}={arg} is not a valid choice; '
                                   f'choose one of {opt["choices"]}')
        return arg

    def _invalid_type(self, opt_name, opt_type):
        self._print_menu_error(
            f'{opt_name} was not of type {opt_type.__name__}')

    def _print_menu_error(self, msg):
        self._print_error(f'In the menu {self.menu["name_str"]}, {msg}')

    def _print_error(self, msg, matches=None):
        if not self.exit_on_fail:
            raise ArgParseError(msg)
        print(msg, file=sys.stderr)
        self._print_help(matches)
        sys.exit(USAGE_EXIT)

    def _print_help(self, matches=None):
        self.needed_help = True
        if matches is None:
            self._print_menu_help()
        else:
            self._print_menus(matches)

    def _print_menus(self, matches):
        """
        Print the usage line of the given menus, or of every command
        when none is given.
        """
        if len(matches) == 0:
            matches = self._all_commands()
        for menu in matches:
            self.menu = menu
            self._print_menu_help(only_usage=True)

    def _all_commands(self):
        found = []
        stack = [self.menus.pattern]
        while stack:
            node = stack.pop()
            for tok, child in sorted(node.items(), reverse=True):
                if tok == '__menu':
                    continue
                if '__menu' in child and child['__menu']['is_cmd']:
                    found.append(child['__menu'])
                stack.append(child)
        return sorted({menu['name_str']: menu for menu in found}.values(),
                      key=lambda menu: menu['name_str'])

    def _print_menu_help(self, only_usage=False):
        if self.menu is None:
            return
        pos_args = []
        for arg in self.menu['pos_opts']:
            if arg['required']:
                pos_args.append(f'[{arg["name"]}]')
            else:
                pos_args.append(f'[{arg["name"]} (opt)]')
        pos_args = ' '.join(pos_args)
        title = 'COMMAND'
        for alias_str, _ in self.menu['aliases']:
            print(f'{title}: {self.binary_name} {alias_str} {pos_args} ...')
            title = 'ALIAS'
        if self.menu['msg'] is not None:
            print(f'BRIEF: {self.menu["msg"]}')
        print()
        if only_usage:
            return

        # Filter out aliases and group options into classes
        all_opts = (self.menu['pos_opts'] +
                    [opt for name, opt in self.menu['kw_opts'].items()
                     if name == opt['name']])
        all_class_opts = {}
        for opt in all_opts:
            all_class_opts.setdefault(opt['class'] or '', []).append(opt)

        headers = ['Name', 'Default', 'Type', 'Description']
        for class_name, class_opts in sorted(all_class_opts.items()):
            table = []
            print(f'Option Class: {class_name}')
            class_opts.sort(key=lambda opt: opt['rank'])
            for arg in class_opts:
                names = [arg['name'].replace('_', '-')]
                names += list(arg.get('aliases', []))
                table.append([','.join(sorted(names)), arg['default'],
                              arg['type'].__name__, arg['msg']])
            print(tabulate(table, headers=headers, tablefmt='simple'))
            print()
