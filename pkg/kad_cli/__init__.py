__author__ = 'KAD Team'

"""
This package provides the ``kad`` command line interface.
"""
