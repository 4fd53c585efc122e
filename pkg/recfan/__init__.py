"""Top-level package for recfan."""


__author__ = """recfan"""
__email__ = ''
__version__ = '0.1.0'
