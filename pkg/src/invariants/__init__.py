"""
Módulo invariants: órdenes locales, números de Chern orbifold, fórmulas
cerradas, clasificación y enumeradores.
"""

from .local_orders import local_order, ordinary_order, pencil_order, cusp_order
from .chern import ChernPair, canonical_slope, c1sq_orbifold, euler_orbifold, chern_pair
from .closed_forms import apollonius_cherns, splitting_identities, cuspidal_cherns
from .classify import TriangleClass, classify, classify_values, triangle_class
from .search import (
    CLAUSES,
    CuspidalRow,
    ParabolicResult,
    enumerate_cuspidal,
    render_case,
    search_parabolic,
    weight_domain,
)

__all__ = [
    'local_order', 'ordinary_order', 'pencil_order', 'cusp_order', 'ChernPair',
    'canonical_slope', 'c1sq_orbifold', 'euler_orbifold', 'chern_pair',
    'apollonius_cherns', 'splitting_identities', 'cuspidal_cherns', 'TriangleClass',
    'classify', 'classify_values', 'triangle_class', 'CLAUSES', 'CuspidalRow',
    'ParabolicResult', 'enumerate_cuspidal', 'render_case', 'search_parabolic',
    'weight_domain',
]
