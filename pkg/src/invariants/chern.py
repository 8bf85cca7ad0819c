"""
Números de Chern orbifold e(P², B) y c1²(P², B).
"""

from dataclasses import dataclass

from errors import UnsupportedLocalType
from numerics import ONE, XRat, weight_reciprocal

from configuration import normalize
from .local_orders import local_order


@dataclass(frozen=True)
class ChernPair:
    """Par (c1², e) de una orbifold."""

    c1sq: XRat
    euler: XRat

    @property
    def diff2(self):
        """2e − c1²."""
        return XRat(2) * self.euler - self.c1sq

    @property
    def diff3(self):
        """3e − c1²."""
        return XRat(3) * self.euler - self.c1sq

    def scaled(self, degree):
        return ChernPair(self.c1sq * degree, self.euler * degree)

    def to_json(self):
        return {"c1sq": self.c1sq.to_json(), "euler": self.euler.to_json()}


def canonical_slope(config):
    """K = −3 + Σ d_i(1 − 1/b_i); c1² = K²."""
    config = normalize(config)
    total = XRat(-3)
    for comp in config.components:
        total = total + XRat(comp.degree) * (ONE - weight_reciprocal(comp.weight))
    return total


def c1sq_orbifold(config):
    """c1²(P², B) = [−3 + Σ d_i(1 − 1/b_i)]²."""
    return canonical_slope(config) ** 2


def euler_orbifold(config, tangency_orders=False):
    """
    e(P², B) = 3 − Σ(1 − 1/b_i)·e(B_i ∖ sing B) − Σ_p (1 − 1/β(p)).

    e(B_i ∖ sing B) es euler_set menos los puntos singulares sobre B_i,
    contando cada punto una sola vez.

    Raises:
        InadmissibleWeights, NonIntegralOrder: Propagados desde local_order
        UnsupportedLocalType: Haz con contacto ≥ 3 sin tangency_orders
    """
    config = normalize(config)
    total = XRat(3)
    for comp in config.components:
        total = total - (ONE - weight_reciprocal(comp.weight)) * XRat(config.open_euler(comp.id))
    for point in config.points:
        try:
            order = local_order(point.local_type, config.weights_at(point), tangency_orders)
        except UnsupportedLocalType as exc:
            raise UnsupportedLocalType(str(exc), point.id) from None
        total = total - (ONE - order.reciprocal())
    return total


def chern_pair(config, tangency_orders=False):
    return ChernPair(c1sq_orbifold(config), euler_orbifold(config, tangency_orders))
