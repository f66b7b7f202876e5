#!/usr/bin/env python

from setuptools import setup

requirements = [
    'numpy',
    'pyyaml',
    'click'
]

__version__ = None
with open('kad_core/version.py') as f:
    exec(f.read())

setup(name='kad-core',
      version=__version__,
      description='Decision procedures for Kleene algebra with domain over relations',
      author='KAD Team',
      packages=['kad_core', 'kad_core.util', 'kad_core.terms', 'kad_core.trees', 'kad_core.relstruct',
                'kad_core.freealg', 'kad_core.automata', 'kad_core.pdl', 'kad_cli'],
      package_data={'kad_core.util': ['default_settings.yaml']},
      python_requires='>=3.10',
      entry_points={
          'kad_deciders': [
              'cd1 = kad_core.deciders:CD1Decider',
              'star_free = kad_core.deciders:StarFreeDecider',
              'full = kad_core.deciders:FullDecider',
          ],
          'console_scripts': ['kad = kad_cli.cli:main'],
      },
      install_requires=requirements,
      extras_require={'test': ['pytest', 'hypothesis']}
      )
