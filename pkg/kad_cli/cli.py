import os
import sys
from typing import List, Optional

import click

from kad_core import __version__
from kad_core.deciders import decider_for, get_decider
from kad_core.freealg import interp_bounded, interp_star_free, meet_finite, member_down, single_interp
from kad_core.pdl import VerdictStatus
from kad_core.relstruct import refute
from kad_core.selftest import run_selftest
from kad_core.terms import CD1_OPERATORS, Fragment, Term, classify, parse, signature
from kad_core.trees import PointedTree, parse_tree, reduce, to_dot
from kad_core.util import get_settings

#: Name of command line executable
CLI_NAME = 'kad'
CLI_DESCRIPTION = 'Decide equations of Kleene algebra with domain over relations'

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2
EXIT_UNKNOWN = 3

FRAGMENT_DECIDERS = {'cd1': 'cd1', 'star-free': 'star_free', 'full': 'full'}

_EXIT_CODES = {
    VerdictStatus.VALID: EXIT_OK,
    VerdictStatus.INVALID: EXIT_FALSE,
    VerdictStatus.UNKNOWN_AT_SCALE: EXIT_UNKNOWN,
}


class _StdinLines(object):

    def __init__(self):
        self._lines = None

    def next_line(self) -> str:
        if self._lines is None:
            stream = click.get_text_stream('stdin')
            self._lines = [line.strip() for line in stream.read().splitlines() if len(line.strip()) > 0]
        if len(self._lines) == 0:
            raise click.UsageError('Expected another term on standard input')
        return self._lines.pop(0)


def _read_terms(*texts: str) -> List[Term]:
    stdin = _StdinLines()
    return [parse(stdin.next_line() if text == '-' else text) for text in texts]


def _read_tree(text: str) -> PointedTree:
    if os.path.isfile(text):
        with open(text, 'r') as tree_file:
            text = tree_file.read()
    return parse_tree(text.strip())


@click.group(name=CLI_NAME, help=CLI_DESCRIPTION)
@click.version_option(__version__, prog_name=CLI_NAME)
def cli():
    pass


@cli.command(help='Decide whether the equation S = T holds in all algebras of relations.')
@click.argument('s', default='-')
@click.argument('t', default='-')
@click.option('--fragment', type=click.Choice(['auto', 'cd1', 'star-free', 'full']), default='auto',
              help='Decision procedure to use; auto picks the one for the smallest fragment.')
@click.option('--witness', is_flag=True, help='Print a discriminating tree for invalid equations.')
@click.option('--metrics', is_flag=True, help='Print the sizes and times of the pipeline stages to stderr.')
def decide(s: str, t: str, fragment: str, witness: bool, metrics: bool) -> int:
    left, right = _read_terms(s, t)
    if fragment == 'auto':
        decider = decider_for(left, right)
    else:
        decider = get_decider(FRAGMENT_DECIDERS[fragment])
        if decider is None:
            raise click.UsageError(f'No decider registered for fragment {fragment}')
    verdict = decider.decide(left, right)
    click.echo(verdict.status.value)
    if witness and verdict.witness is not None:
        click.echo(str(verdict.witness))
    if metrics:
        click.echo(f'decider: {decider.name()}', err=True)
        for key, value in verdict.stage_metrics.items():
            click.echo(f'{key}: {value:.6f}' if isinstance(value, float) else f'{key}: {value}', err=True)
    return _EXIT_CODES[verdict.status]


@cli.command(help='Print the tree interpretation of a term, one tree per line.')
@click.argument('term', default='-')
@click.option('--cap', type=click.IntRange(min=1), default=None,
              help='Truncate every star after CAP iterations; needed for terms with star.')
def normalize(term: str, cap: Optional[int]) -> int:
    t, = _read_terms(term)
    fragment = classify(t)
    if fragment == Fragment.FULL and cap is None:
        raise click.UsageError('The term contains a star; use --cap to truncate it')
    if fragment <= Fragment.STAR_FREE:
        antichain = interp_star_free(t)
    else:
        antichain, _ = interp_bounded(t, cap)
    click.echo(antichain.to_text(), nl=False)
    return EXIT_OK


@cli.command(help='Print the meet of the tree interpretations of two star-free terms.')
@click.argument('s', default='-')
@click.argument('t', default='-')
def meet(s: str, t: str) -> int:
    left, right = _read_terms(s, t)
    click.echo(meet_finite(interp_star_free(left), interp_star_free(right)).to_text(), nl=False)
    return EXIT_OK


@cli.command(help='Check whether root and point of TREE satisfy TERM. TREE is a file or tree text.')
@click.argument('tree')
@click.argument('term', default='-')
def member(tree: str, term: str) -> int:
    t, = _read_terms(term)
    result = member_down(_read_tree(tree), t)
    click.echo('true' if result else 'false')
    return EXIT_OK if result else EXIT_FALSE


@cli.command(name='refute', help='Search all small structures for one on which S and T differ.')
@click.argument('s', default='-')
@click.argument('t', default='-')
@click.option('--max-n', type=click.IntRange(min=1), default=None,
              help='Largest number of vertices to try.')
def refute_equation(s: str, t: str, max_n: Optional[int]) -> int:
    left, right = _read_terms(s, t)
    if max_n is None:
        max_n = get_settings().refute_max_vertices
    refutation = refute(left, right, max_n)
    if refutation is None:
        return EXIT_OK
    click.echo(refutation.render(), nl=False)
    return EXIT_FALSE


@cli.command(help='Render a tree, or the tree interpretation of a star-free term, in the DOT language.')
@click.argument('source', default='-')
def dot(source: str) -> int:
    if os.path.isfile(source) or source.lstrip().startswith('{'):
        trees = [_read_tree(source)]
    else:
        t, = _read_terms(source)
        if signature(t).within(CD1_OPERATORS):
            trees = [single_interp(t)]
        else:
            trees = list(interp_star_free(t))
    for index, tree in enumerate(trees):
        click.echo(to_dot(reduce(tree), 'tree' if len(trees) == 1 else f'tree{index}'), nl=False)
    return EXIT_OK


@cli.command(help='Run the built-in consistency checks.')
def selftest() -> int:
    lines, passed = run_selftest()
    for line in lines:
        click.echo(line)
    return EXIT_OK if passed else EXIT_FALSE


def main(args=None) -> int:
    try:
        result = cli.main(args=args, prog_name=CLI_NAME, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_ERROR
    except click.Abort:
        click.echo('Aborted', err=True)
        return EXIT_ERROR
    except ValueError as e:
        click.echo(f'Error: {e}', err=True)
        return EXIT_ERROR
    return result if isinstance(result, int) else EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
