"""
Módulo configuration: configuraciones pesadas de curvas en el plano proyectivo.
Contiene el modelo de datos, el formato de documento, la normalización y los
constructores de familias.
"""

from .model import (
    CLASS_NAMES,
    ClassTag,
    CurveComponent,
    EMPTY,
    HigherTacnode,
    Node,
    OrbifoldConfig,
    OrdinaryLinePoint,
    SimpleCusp,
    SingularPointRec,
    Tacnode,
    TangentPencil,
    TransversalTriple,
    UnibranchPower,
    kind_for_degree,
    parse_local_type,
)
from .parser import ConfigParser, parse_config, render_config
from .builders import (
    PRESETS,
    build_apollonius,
    build_cuspidal,
    build_preset,
    build_qm,
    cuspidal_genus,
)
from .checks import (
    Violation,
    boundary_points,
    canonical_form,
    iso_check,
    normalize,
    pair_intersections,
    validate,
)

__all__ = [
    'CLASS_NAMES', 'ClassTag', 'CurveComponent', 'EMPTY', 'HigherTacnode', 'Node',
    'OrbifoldConfig', 'OrdinaryLinePoint', 'SimpleCusp', 'SingularPointRec', 'Tacnode',
    'TangentPencil', 'TransversalTriple', 'UnibranchPower', 'kind_for_degree',
    'parse_local_type', 'ConfigParser', 'parse_config', 'render_config', 'PRESETS',
    'build_apollonius', 'build_cuspidal', 'build_preset', 'build_qm', 'cuspidal_genus',
    'Violation', 'boundary_points', 'canonical_form', 'iso_check', 'normalize',
    'pair_intersections', 'validate',
]
