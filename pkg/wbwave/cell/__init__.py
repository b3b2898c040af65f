"""
wbwave Cell Plane
Exact frozen-coefficient solutions on one mesh cell.
"""
from .roots import RootCase, RootSet, characteristic_roots
from .operator import (
    CellOperator,
    ShiftRow,
    flux_matrix,
    flux_coefficients,
    shift_row,
    shift_weights,
    cell_eval,
    fundamental_pair,
)

__all__ = [
    'RootCase',
    'RootSet',
    'characteristic_roots',
    'CellOperator',
    'ShiftRow',
    'flux_matrix',
    'flux_coefficients',
    'shift_row',
    'shift_weights',
    'cell_eval',
    'fundamental_pair',
]
