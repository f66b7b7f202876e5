import io
import sys

import pytest

from kad_cli.cli import EXIT_ERROR, EXIT_FALSE, EXIT_OK, main
from kad_core import __version__
from kad_core.util import reset_settings
from kad_core.util import settings as settings_module

__author__ = 'KAD Team'

PATH_TO_SETTINGS_FILE = './test/test_data/settings.yaml'
PATH_TO_UNREDUCED = './test/test_data/unreduced.tree'


@pytest.fixture(autouse=True)
def user_settings(monkeypatch):
    monkeypatch.setattr(settings_module, '_get_user_settings_file', lambda: PATH_TO_SETTINGS_FILE)
    reset_settings()
    yield
    reset_settings()


def _stdin(monkeypatch, text: str):
    monkeypatch.setattr(sys, 'stdin', io.StringIO(text))


def test_version(capsys):
    assert EXIT_OK == main(['--version'])
    assert __version__ in capsys.readouterr().out


def test_decide_valid(capsys):
    assert EXIT_OK == main(['decide', 'a*', '1 + a;a*'])
    assert 'valid\n' == capsys.readouterr().out


def test_decide_invalid_with_witness(capsys):
    assert EXIT_FALSE == main(['decide', 'a;b', 'b;a', '--witness'])
    assert 'invalid\n{a:{b:{}!}}\n' == capsys.readouterr().out


def test_decide_invalid_without_witness(capsys):
    assert EXIT_FALSE == main(['decide', 'D(a)', '1'])
    assert 'invalid\n' == capsys.readouterr().out


def test_decide_from_stdin(capsys, monkeypatch):
    _stdin(monkeypatch, 'D(a);a\n\na\n')

    assert EXIT_OK == main(['decide'])
    assert 'valid\n' == capsys.readouterr().out


def test_decide_with_one_term_from_stdin(capsys, monkeypatch):
    _stdin(monkeypatch, 'a + a\n')

    assert EXIT_OK == main(['decide', 'a', '-'])
    assert 'valid\n' == capsys.readouterr().out


def test_decide_with_missing_stdin_term(capsys, monkeypatch):
    _stdin(monkeypatch, 'a\n')

    assert EXIT_ERROR == main(['decide'])
    assert 'standard input' in capsys.readouterr().err


def test_decide_metrics(capsys):
    assert EXIT_OK == main(['decide', 'a*', '1 + a;a*', '--metrics'])
    captured = capsys.readouterr()
    assert 'valid\n' == captured.out
    assert 'decider: full' in captured.err
    assert 'guards: 0' in captured.err


def test_decide_fragment(capsys):
    assert EXIT_OK == main(['decide', 'D(a;b)', 'D(a;D(b))', '--fragment', 'star-free'])
    assert EXIT_ERROR == main(['decide', 'a*', '1', '--fragment', 'cd1'])
    assert EXIT_ERROR == main(['decide', 'A(a)', '1'])
    assert EXIT_ERROR == main(['decide', 'a', 'a', '--fragment', 'regular'])


def test_decide_syntax_error(capsys):
    assert EXIT_ERROR == main(['decide', 'a;;b', 'a'])
    assert capsys.readouterr().err.startswith('Error: ')


def test_normalize(capsys):
    assert EXIT_OK == main(['normalize', 'D(a) + 1'])
    assert '{}!\n' == capsys.readouterr().out
    assert EXIT_OK == main(['normalize', '0'])
    assert '' == capsys.readouterr().out
    assert EXIT_OK == main(['normalize', 'a + a;b'])
    assert '{a:{}!}\n{a:{b:{}!}}\n' == capsys.readouterr().out


def test_normalize_with_cap(capsys):
    assert EXIT_OK == main(['normalize', 'a*', '--cap', '3'])
    assert '{}!\n{a:{}!}\n{a:{a:{}!}}\n{a:{a:{a:{}!}}}\n' == capsys.readouterr().out
    assert EXIT_ERROR == main(['normalize', 'a*'])
    assert EXIT_ERROR == main(['normalize', 'a*', '--cap', '0'])


def test_meet(capsys):
    assert EXIT_OK == main(['meet', 'D(a)', 'D(b)'])
    assert '{a:{}, b:{}}!\n' == capsys.readouterr().out
    assert EXIT_OK == main(['meet', 'a', 'b'])
    assert '' == capsys.readouterr().out


def test_member(capsys):
    assert EXIT_FALSE == main(['member', '{}!', 'D(a)'])
    assert 'false\n' == capsys.readouterr().out
    assert EXIT_OK == main(['member', PATH_TO_UNREDUCED, 'a;D(b)'])
    assert 'true\n' == capsys.readouterr().out
    assert EXIT_ERROR == main(['member', '{a:{}}', 'a'])


def test_refute(capsys):
    assert EXIT_OK == main(['refute', 'D(a);a', 'a'])
    assert '' == capsys.readouterr().out
    assert EXIT_FALSE == main(['refute', 'a;b', 'b;a'])
    output = capsys.readouterr().out
    assert output.startswith('vertices ')
    assert '\npair ' in output
    assert EXIT_OK == main(['refute', 'a;b', 'b;a', '--max-n', '1'])


def test_dot(capsys):
    assert EXIT_OK == main(['dot', 'D(a;b)'])
    output = capsys.readouterr().out
    assert output.startswith('digraph tree {\n')
    assert 3 == output.count('[label="", shape=')
    assert '  n0 [label="", shape=doublecircle, style=filled];\n' in output
    assert EXIT_OK == main(['dot', 'a + b'])
    output = capsys.readouterr().out
    assert 'digraph tree0 {' in output
    assert 'digraph tree1 {' in output
    assert EXIT_OK == main(['dot', PATH_TO_UNREDUCED])
    assert 4 == capsys.readouterr().out.count('[label="", shape=')


def test_selftest(capsys):
    assert EXIT_OK == main(['selftest'])
    lines = capsys.readouterr().out.splitlines()
    assert 10 == len(lines)
    assert all(line.startswith('PASS ') for line in lines)
