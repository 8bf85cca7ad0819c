"""
Fórmulas cerradas: familia de Apolonio A(a; b_1..b_n) y curvas cuspidales.
"""

from itertools import combinations

from errors import NegativeGenus
from numerics import ONE, XRat, weight_reciprocal

from configuration.builders import cuspidal_genus
from configuration.model import Tacnode

from .chern import ChernPair
from .local_orders import local_order

HALF = XRat(1, 2)


def apollonius_cherns(a, bs):
    """
    Números de Chern de A(a; b_1..b_n) por fórmula cerrada.

    c1² = [n − 1 − 2/a − Σ1/b_i]²
    e = (n−1)(n−2)/2 + (2−n)/a + (2−n)Σ1/b_i + Σ_{i<j} 1/(b_i b_j)
        + ½ Σ [1/b_i + 1/a − 1/2]²

    La suma doble recorre pares no ordenados.

    Raises:
        InadmissibleWeights: Si algún tacnodo (a, b_i) no es admisible
    """
    bs = list(bs)
    n = len(bs)
    for b in bs:
        local_order(Tacnode(), [a, b])
    inv_a = weight_reciprocal(a)
    inv_b = [weight_reciprocal(b) for b in bs]
    beta = sum(inv_b, XRat(0))
    c1sq = (XRat(n - 1) - XRat(2) * inv_a - beta) ** 2
    euler = XRat((n - 1) * (n - 2), 2) + XRat(2 - n) * inv_a + XRat(2 - n) * beta
    for x, y in combinations(inv_b, 2):
        euler = euler + x * y
    for x in inv_b:
        euler = euler + HALF * (x + inv_a - HALF) ** 2
    return ChernPair(c1sq, euler)


def splitting_identities(a, bs):
    """
    Lados derechos de las fórmulas de desdoblamiento, con β = Σ1/b_i y α = β − 1/a.

    Returns:
        tuple[XRat, XRat]: (2(2e − c1²), 8(3e − c1²))
    """
    n = len(bs)
    inv_a = weight_reciprocal(a)
    beta = sum((weight_reciprocal(b) for b in bs), XRat(0))
    alpha = beta - inv_a
    first = (inv_a - HALF) * (
        XRat(n) * (XRat(2) * inv_a + XRat(3)) - XRat(4) * beta - XRat(4) * (XRat(2) * inv_a + ONE)
    )
    second = (XRat(2) * alpha + XRat(5 - 2 * n)) ** 2 + XRat(3 * (n - 3)) * (XRat(2) * inv_a - ONE) ** 2
    return first, second


def cuspidal_cherns(d, kappa, nu, b):
    """
    Números de Chern de (P², bC), C irreducible de grado d con κ cúspides y ν nodos.

    e = 3 + d² − 3d − 2κ − ν + (−d² + 3d + κ)/b + ν/b² + (3κ/2)[1/b − 1/6]²
    c1² = [−3 + d(1 − 1/b)]²

    Raises:
        NegativeGenus: Si (d−1)(d−2)/2 − κ − ν < 0
    """
    if cuspidal_genus(d, kappa, nu) < 0:
        raise NegativeGenus(f"d={d} κ={kappa} ν={nu}: género negativo")
    inv_b = weight_reciprocal(b)
    euler = (
        XRat(3 + d * d - 3 * d - 2 * kappa - nu)
        + XRat(-d * d + 3 * d + kappa) * inv_b
        + XRat(nu) * inv_b ** 2
        + XRat(3 * kappa, 2) * (inv_b - XRat(1, 6)) ** 2
    )
    c1sq = (XRat(-3) + XRat(d) * (ONE - inv_b)) ** 2
    return ChernPair(c1sq, euler)
