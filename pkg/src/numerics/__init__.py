"""
Módulo numerics: aritmética racional exacta extendida con INF.
"""

from .xrat import (
    XRat,
    INF,
    ZERO,
    ONE,
    weight_reciprocal,
    is_inf_weight,
    parse_weight,
    render_weight,
    weight_key,
    compare,
)

__all__ = [
    'XRat', 'INF', 'ZERO', 'ONE', 'weight_reciprocal', 'is_inf_weight',
    'parse_weight', 'render_weight', 'weight_key', 'compare',
]
