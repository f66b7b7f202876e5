"""
Description
===========

Runtime settings of KAD. Defaults ship with the package in ``default_settings.yaml``; a user may override single keys
in ``~/.kad/settings.yaml``.
"""

from importlib import resources
from pathlib import Path
from typing import List, Optional
import os
import yaml

__author__ = 'KAD Team'

KAD_DIR_NAME = '.kad'
SETTINGS_FILE_NAME = 'settings.yaml'
DEFAULT_SETTINGS_FILE_NAME = 'default_settings.yaml'

_SETTINGS = []


class Settings(object):

    def __init__(self, settings_as_dict: dict):
        self._star_cap = int(settings_as_dict['star_cap'])
        self._refute_max_vertices = int(settings_as_dict['refute_max_vertices'])
        self._refute_batch_size = int(settings_as_dict['refute_batch_size'])
        witness_max_edges = settings_as_dict.get('witness_max_edges')
        self._witness_max_edges = None if witness_max_edges is None else int(witness_max_edges)
        self._log_level = str(settings_as_dict['log_level']).upper()
        self._selftest_seed = int(settings_as_dict['selftest_seed'])
        self._selftest_alphabet = [str(label) for label in settings_as_dict['selftest_alphabet']]
        self._selftest_samples = int(settings_as_dict['selftest_samples'])
        if self._star_cap < 1:
            raise ValueError(f'star_cap must be at least 1, got {self._star_cap}')
        if self._refute_max_vertices < 1:
            raise ValueError(f'refute_max_vertices must be at least 1, got {self._refute_max_vertices}')
        if self._refute_batch_size < 1:
            raise ValueError(f'refute_batch_size must be at least 1, got {self._refute_batch_size}')

    def __repr__(self):
        return 'Settings:\n' \
               '  Star Cap: {}, \n' \
               '  Refute Max Vertices: {}, \n' \
               '  Refute Batch Size: {}, \n' \
               '  Witness Max Edges: {}, \n' \
               '  Log Level: {}\n'.format(self.star_cap, self.refute_max_vertices, self.refute_batch_size,
                                          self.witness_max_edges, self.log_level)

    @property
    def star_cap(self) -> int:
        return self._star_cap

    @property
    def refute_max_vertices(self) -> int:
        return self._refute_max_vertices

    @property
    def refute_batch_size(self) -> int:
        return self._refute_batch_size

    @property
    def witness_max_edges(self) -> Optional[int]:
        return self._witness_max_edges

    @property
    def log_level(self) -> str:
        return self._log_level

    @property
    def selftest_seed(self) -> int:
        return self._selftest_seed

    @property
    def selftest_alphabet(self) -> List[str]:
        return self._selftest_alphabet

    @property
    def selftest_samples(self) -> int:
        return self._selftest_samples


def get_default_settings() -> dict:
    with resources.files(__package__).joinpath(DEFAULT_SETTINGS_FILE_NAME).open('r') as default_settings_file:
        return yaml.safe_load(default_settings_file)


def _get_user_settings_file() -> str:
    home_dir = str(Path.home())
    return f'{home_dir}/{KAD_DIR_NAME}/{SETTINGS_FILE_NAME}'


def _read_settings(path_to_file: Optional[str]) -> dict:
    settings_dict = get_default_settings()
    if path_to_file is not None and os.path.exists(path_to_file):
        with open(path_to_file, 'r') as settings_file:
            user_settings = yaml.safe_load(settings_file)
        if user_settings is not None:
            if not isinstance(user_settings, dict):
                raise ValueError(f'Settings file {path_to_file} must contain a mapping')
            unknown_keys = set(user_settings.keys()) - set(settings_dict.keys())
            if len(unknown_keys) > 0:
                raise ValueError(f'Unknown settings in {path_to_file}: {", ".join(sorted(unknown_keys))}')
            settings_dict.update(user_settings)
    return settings_dict


def get_settings() -> Settings:
    if len(_SETTINGS) == 0:
        _SETTINGS.append(Settings(_read_settings(_get_user_settings_file())))
    return _SETTINGS[0]


def load_settings(path_to_file: str) -> Settings:
    """
    Reads settings from a specific file, falling back to the packaged defaults for missing keys.
    :param path_to_file: Path to a yaml file
    :return: The settings
    """
    return Settings(_read_settings(path_to_file))


def reset_settings():
    _SETTINGS.clear()
