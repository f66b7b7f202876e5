import logging

import pytest

from kad_core.util import Settings, get_default_settings, get_logger, get_settings, load_settings, reset_settings
from kad_core.util import settings as settings_module

__author__ = 'KAD Team'

PATH_TO_SETTINGS_FILE = './test/test_data/settings.yaml'
PATH_TO_BAD_SETTINGS_FILE = './test/test_data/bad_settings.yaml'


def test_get_default_settings():
    default_settings = get_default_settings()

    assert 16 == default_settings['star_cap']
    assert 3 == default_settings['refute_max_vertices']
    assert 65536 == default_settings['refute_batch_size']
    assert default_settings['witness_max_edges'] is None
    assert 'INFO' == default_settings['log_level']
    assert 42 == default_settings['selftest_seed']
    assert ['a', 'b'] == default_settings['selftest_alphabet']


def test_load_settings():
    settings = load_settings(PATH_TO_SETTINGS_FILE)

    assert 4 == settings.star_cap
    assert 2 == settings.refute_max_vertices
    assert 5 == settings.selftest_samples
    assert 'WARNING' == settings.log_level
    assert 65536 == settings.refute_batch_size
    assert settings.witness_max_edges is None


def test_load_settings_missing_file():
    settings = load_settings('./test/test_data/not_there.yaml')

    assert 16 == settings.star_cap


def test_load_settings_unknown_key():
    with pytest.raises(ValueError, match='cache_dir'):
        load_settings(PATH_TO_BAD_SETTINGS_FILE)


def test_settings_validation():
    settings_dict = get_default_settings()
    settings_dict['star_cap'] = 0
    with pytest.raises(ValueError):
        Settings(settings_dict)


def test_get_settings_reads_user_file(monkeypatch):
    monkeypatch.setattr(settings_module, '_get_user_settings_file', lambda: PATH_TO_SETTINGS_FILE)
    reset_settings()
    try:
        assert 4 == get_settings().star_cap
        assert get_settings() is get_settings()
    finally:
        reset_settings()


def test_get_logger():
    logger = get_logger('kad_core.test')

    assert 1 == len(logger.handlers)
    assert not logger.propagate
    assert logging.getLevelName(get_settings().log_level) == logger.level
    assert get_logger('kad_core.test') is logger
    assert 1 == len(logger.handlers)
