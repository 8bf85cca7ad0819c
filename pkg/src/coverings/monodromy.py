"""
Monodromía de una componente en el cubrimiento de Kummer φ_k de grupo (Z/k)².

Para la terna ordenada (X, Y, Z) de rectas de ramificación los meridianos van
a g_X = (1,0), g_Y = (0,1), g_Z = (−1,−1). Un lazo en la componente C alrededor
de un punto de C ∩ L con multiplicidad local m va a m·g_L; alrededor de un
vértice L ∩ M va a m₁·g_L + m₂·g_M. El subgrupo H_C generado por esas imágenes
indexa las componentes de φ_k⁻¹(C) por las clases G/H_C.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from errors import ProfileInconsistency
from configuration.model import TangentPencil


def generator_vectors(triple, k):
    """Imagen de los meridianos de las rectas de la terna en (Z/k)²."""
    first, second, third = triple
    return {first: (1 % k, 0), second: (0, 1 % k), third: ((-1) % k, (-1) % k)}


@dataclass(frozen=True)
class ProfileBranch:
    """Una rama de C en un punto de Δ: contactos (recta, multiplicidad)."""

    point_id: str
    contacts: tuple


@dataclass(frozen=True)
class IncidenceProfile:
    """
    Perfil de incidencia de una componente con las rectas de ramificación.

    Atributos:
        component_id: Componente C
        degree: Grado de C
        triple: Terna ordenada de rectas de ramificación
        branches: Ramas de C sobre Δ, con sus contactos
    """

    component_id: str
    degree: int
    triple: tuple
    branches: tuple

    def by_line(self):
        """Vista (recta, [multiplicidad por punto]) con las multiplicidades sumadas por punto."""
        out = []
        for line in self.triple:
            per_point = {}
            for branch in self.branches:
                for cid, mult in branch.contacts:
                    if cid == line:
                        per_point[branch.point_id] = per_point.get(branch.point_id, 0) + mult
            out.append((line, [per_point[p] for p in sorted(per_point)]))
        return out

    def point_ids(self):
        return sorted({b.point_id for b in self.branches})

    def check(self):
        """
        Raises:
            ProfileInconsistency: Si sobre alguna recta las multiplicidades no suman el grado
        """
        for line, mults in self.by_line():
            if sum(mults) != self.degree:
                raise ProfileInconsistency(
                    f"{self.component_id}: multiplicidades {mults} sobre {line} no suman {self.degree}"
                )
        return self


def branch_contacts(point, index, lines):
    """
    Contactos (recta, multiplicidad) de la rama `index` del punto con las rectas dadas.
    """
    names = point.branches()
    local = point.local_type
    contacts = []
    for j, cid in enumerate(names):
        if j == index or cid not in lines:
            continue
        mult = 1
        if isinstance(local, TangentPencil) and j < local.branches and index < local.branches:
            mult = local.contact
        contacts.append((cid, mult))
    return tuple(contacts)


def incidence_profile(config, component_id, triple):
    """
    Construye y comprueba el perfil de incidencia de una componente no ramificada.

    Raises:
        ProfileInconsistency: Perfil que no suma el grado sobre alguna recta
    """
    lines = set(triple)
    branches = []
    for point in config.points_on(component_id):
        if not lines.intersection(point.component_ids()):
            continue
        for index, cid in enumerate(point.branches()):
            if cid == component_id:
                branches.append(ProfileBranch(point.id, branch_contacts(point, index, lines)))
    comp = config.component(component_id)
    return IncidenceProfile(component_id, comp.degree, tuple(triple), tuple(branches)).check()


# ============================================================================
# CLASE: SubgroupDescriptor
# Propósito: Subgrupo H de G = (Z/k)² con sus clases laterales
# ============================================================================
@dataclass(frozen=True)
class SubgroupDescriptor:
    """
    Atributos:
        k: Exponente del cubrimiento
        generators: Vectores generadores en (Z/k)²
        elements: Elementos de H
        quotient_factors: Factores invariantes de G/H (cada uno > 1)
        index: [G:H]
    """

    k: int
    generators: tuple
    elements: frozenset
    quotient_factors: tuple
    index: int

    def coset_rep(self, g):
        """Representante canónico (mínimo lexicográfico) de g + H."""
        k = self.k
        return min(((g[0] + h[0]) % k, (g[1] + h[1]) % k) for h in self.elements)

    def cosets(self):
        """Representantes de G/H en orden creciente."""
        return sorted({self.coset_rep(g) for g in group_elements(self.k)})

    def coset_index(self, g):
        """Posición (base 0) de la clase de g en cosets()."""
        return self.cosets().index(self.coset_rep(g))


def group_elements(k):
    return [(i, j) for i, j in product(range(k), range(k))]


def subgroup(generators, k):
    """Subgrupo de (Z/k)² generado por los vectores dados."""
    generators = tuple(sorted({(g[0] % k, g[1] % k) for g in generators}))
    elements = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        current = frontier.pop()
        for g in generators:
            nxt = ((current[0] + g[0]) % k, (current[1] + g[1]) % k)
            if nxt not in elements:
                elements.add(nxt)
                frontier.append(nxt)
    rows = np.array([list(g) for g in generators] + [[k, 0], [0, k]], dtype=np.int64)
    snf = smith_normal_form(Matrix(rows.tolist()), domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    factors = tuple(sorted(d for d in diagonal if d > 1))
    index = int(np.prod(diagonal, dtype=np.int64))
    if index * len(elements) != k * k:
        raise ProfileInconsistency(f"índice {index} incompatible con |H| = {len(elements)}")
    return SubgroupDescriptor(k, generators, frozenset(elements), factors, index)


def monodromy_subgroup(profile, k):
    """
    Subgrupo H_C ⊂ (Z/k)² generado por las imágenes de los lazos de C.

    Args:
        profile (IncidenceProfile): Perfil de la componente
        k (int): Exponente del cubrimiento

    Returns:
        SubgroupDescriptor: Con factores invariantes de G/H e índice [G:H]
    """
    gens = generator_vectors(profile.triple, k)
    vectors = []
    for branch in profile.branches:
        x = sum(mult * gens[cid][0] for cid, mult in branch.contacts)
        y = sum(mult * gens[cid][1] for cid, mult in branch.contacts)
        vectors.append((x, y))
    return subgroup(vectors, k)


def supergroups(sub):
    """
    Subgrupos de (Z/k)² que contienen a `sub`, del mayor índice al menor
    (empates por generadores).

    Returns:
        list[SubgroupDescriptor]: Empieza por `sub` y termina en el grupo entero
    """
    k = sub.k
    found = {}
    for g, h in product(group_elements(k), repeat=2):
        candidate = subgroup(list(sub.generators) + [g, h], k)
        found.setdefault(candidate.elements, candidate)
    found[sub.elements] = sub
    return sorted(found.values(), key=lambda s: (-s.index, s.generators))


def lifted_point_count(line_vectors, sub):
    """
    Puntos sobre un punto p de Δ, sumados sobre las [G:H] piezas de C.

    Con E el estabilizador de p (generado por los meridianos de las rectas
    que pasan por p) hay k²/|E| puntos encima de p y por cada uno pasan
    [E + H : H] piezas distintas.
    """
    k = sub.k
    stab = subgroup(line_vectors, k)
    joined = subgroup(list(sub.generators) + list(stab.generators), k)
    return (k * k // len(stab.elements)) * (len(joined.elements) // len(sub.elements))
