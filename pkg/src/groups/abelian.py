"""
Abelianización de presentaciones finitas por forma normal de Smith.
"""

from dataclasses import dataclass

import numpy as np
from sympy import Matrix, ZZ, factorint
from sympy.matrices.normalforms import smith_normal_form

from .presentation import exponent_sum


@dataclass(frozen=True)
class AbelianInvariants:
    """
    G^ab ≅ Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_s con d₁ | d₂ | … y cada d_i > 1.
    """

    free_rank: int
    torsion: tuple

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def order(self):
        """|G^ab| si es finito, None en otro caso."""
        if not self.is_finite:
            return None
        return int(np.prod(self.torsion, dtype=np.int64)) if self.torsion else 1

    def render(self):
        """Texto del tipo "Z^2 + Z/5 + Z/5"; el grupo trivial es "0"."""
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def invariant_factors(diagonal):
    """
    Cadena d₁ | d₂ | … equivalente a una diagonal cualquiera.

    Reagrupa las potencias de primos de cada entrada.
    """
    powers = {}
    for value in diagonal:
        for prime, exponent in factorint(int(value)).items():
            powers.setdefault(prime, []).append(prime ** exponent)
    length = max((len(v) for v in powers.values()), default=0)
    factors = [1] * length
    for values in powers.values():
        for position, value in enumerate(sorted(values, reverse=True)):
            factors[length - 1 - position] *= value
    return tuple(f for f in factors if f > 1)


def relation_matrix(presentation):
    """Matriz de sumas de exponentes: una fila por relator, una columna por generador."""
    rows = [
        [exponent_sum(rel, symbol) for symbol in presentation.generators]
        for rel in presentation.relators
    ]
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(presentation.generators))


def abelianize(presentation):
    """
    Invariantes de G^ab.

    Returns:
        AbelianInvariants: Rango libre y cadena de torsión
    """
    matrix = relation_matrix(presentation)
    generators = matrix.shape[1]
    if matrix.shape[0] == 0 or not matrix.any():
        return AbelianInvariants(generators, ())
    snf = smith_normal_form(Matrix(matrix.tolist()), domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    rank = sum(1 for d in diagonal if d != 0)
    torsion = invariant_factors(d for d in diagonal if d > 1)
    return AbelianInvariants(generators - rank, torsion)
