"""
Clasificación por números de Chern y clase de triángulos de pesos.
"""

from dataclasses import dataclass

from errors import UnsupportedShape
from numerics import ONE, XRat, is_inf_weight, render_weight, weight_reciprocal

from configuration.model import ClassTag
from .chern import canonical_slope, euler_orbifold


def classify_values(euler, slope):
    """
    Etiqueta a partir de e y de K (c1² = K²), con precedencia:
    Flat, BallCandidate, PolydiskCandidate, Spherical, ZeroC1, Other.
    """
    c1sq = slope ** 2
    three = XRat(3) * euler == c1sq
    two = XRat(2) * euler == c1sq
    if euler == 0 and c1sq == 0:
        return ClassTag("Flat", "e = c1² = 0")
    if three and c1sq.sign() > 0 and slope.sign() > 0:
        return ClassTag("BallCandidate", "3e = c1² > 0")
    if two and c1sq != 0 and slope.sign() > 0:
        return ClassTag("PolydiskCandidate", "2e = c1² ≠ 0")
    if slope.sign() < 0 and (three or two):
        return ClassTag("Spherical", "K < 0, " + ("3e = c1²" if three else "2e = c1²"))
    if c1sq == 0 and euler.sign() > 0:
        return ClassTag("ZeroC1", "c1² = 0 < e")
    return ClassTag("Other")


def classify(config, tangency_orders=False):
    """
    Clasifica una configuración normalizada y validada.

    La etiqueta es una condición necesaria, no una prueba de uniformización.

    Returns:
        ClassTag
    """
    return classify_values(euler_orbifold(config, tangency_orders), canonical_slope(config))


@dataclass(frozen=True)
class TriangleClass:
    """Spherical, Euclidean o Hyperbolic, con σ = Σ 1/b_i."""

    name: str
    sigma: XRat

    def __str__(self):
        return f"{self.name} (σ={self.sigma})"


def triangle_class(bs):
    """
    Clase de la orbifold de pesos bs sobre la recta proyectiva.

    Raises:
        UnsupportedShape: n < 2, o n = 2 con b_1 ≠ b_2
    """
    bs = list(bs)
    n = len(bs)
    sigma = sum((weight_reciprocal(b) for b in bs), XRat(0))
    if n < 2:
        raise UnsupportedShape(f"se necesitan al menos dos pesos, no {n}")
    if n == 2:
        if render_weight(bs[0]) != render_weight(bs[1]):
            raise UnsupportedShape(f"n=2 requiere b_1 = b_2, no {render_weight(bs[0])} ≠ {render_weight(bs[1])}")
        name = "Euclidean" if is_inf_weight(bs[0]) else "Spherical"
        return TriangleClass(name, sigma)
    if n == 3:
        if sigma > ONE:
            return TriangleClass("Spherical", sigma)
        if sigma == ONE:
            return TriangleClass("Euclidean", sigma)
        return TriangleClass("Hyperbolic", sigma)
    if n == 4 and all(not is_inf_weight(b) and b == 2 for b in bs):
        return TriangleClass("Euclidean", sigma)
    return TriangleClass("Hyperbolic", sigma)
