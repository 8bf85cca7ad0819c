"""
Módulo coverings: cubrimientos de Kummer, partición de componentes por
monodromía y contabilidad de grados de las construcciones iteradas.
"""

from .monodromy import (
    IncidenceProfile,
    ProfileBranch,
    SubgroupDescriptor,
    generator_vectors,
    incidence_profile,
    monodromy_subgroup,
    subgroup,
    supergroups,
)
from .lift import (
    KummerCover,
    KummerLifter,
    LiftReport,
    OrderCheck,
    component_subgroup,
    lift_config,
    lifted_pieces,
    split_component,
)
from .recursion import (
    K3Check,
    first_lifting_degrees,
    BranchCandidate,
    initial_theorem1,
    k3_checks,
    weight_swap_lift,
    modular_cover_record,
    theorem1_candidates,
    theorem1_iterate,
    theorem2_bookkeeping,
)

__all__ = [
    'IncidenceProfile', 'ProfileBranch', 'SubgroupDescriptor', 'generator_vectors',
    'incidence_profile', 'monodromy_subgroup', 'subgroup', 'KummerCover', 'KummerLifter',
    'LiftReport', 'OrderCheck', 'component_subgroup', 'lift_config', 'lifted_pieces',
    'split_component', 'supergroups', 'K3Check',
    'first_lifting_degrees', 'initial_theorem1', 'k3_checks', 'weight_swap_lift', 'modular_cover_record',
    'BranchCandidate', 'theorem1_candidates', 'theorem1_iterate', 'theorem2_bookkeeping',
]
