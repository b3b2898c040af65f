"""CLI commands package"""
from . import run, preset, fit, table

__all__ = ['run', 'preset', 'fit', 'table']
