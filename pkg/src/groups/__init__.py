"""
Módulo groups: presentaciones finitas, enumeración de clases laterales y
abelianización por forma normal de Smith.
"""

from .presentation import (
    Presentation,
    commutator,
    concat,
    free_reduce,
    inverse,
    letter,
    parse_presentation,
    power,
    render_word,
    word,
)
from .builders import (
    build_a2,
    build_apollonius_pi1,
    build_coordinate_triangle,
    build_local_triple,
    build_modular,
)
from .enumeration import STRATEGIES, CosetTable, enumerate_cosets, quotient_orders, todd_coxeter
from .abelian import AbelianInvariants, abelianize, invariant_factors
from .verify import GroupCheck, GroupReport, spherical_triples, verify_abelianizations, verify_orders

__all__ = [
    'Presentation', 'commutator', 'concat', 'free_reduce', 'inverse', 'letter',
    'parse_presentation', 'power', 'render_word', 'word', 'build_a2',
    'build_apollonius_pi1', 'build_coordinate_triangle', 'build_local_triple',
    'build_modular', 'STRATEGIES', 'CosetTable', 'enumerate_cosets', 'quotient_orders', 'todd_coxeter',
    'AbelianInvariants', 'abelianize', 'invariant_factors', 'GroupCheck', 'GroupReport',
    'spherical_triples', 'verify_abelianizations', 'verify_orders',
]
