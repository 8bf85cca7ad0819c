"""
Órdenes locales β(p) de los puntos singulares de una configuración pesada.
"""

from errors import InadmissibleWeights, NonIntegralOrder, UnsupportedLocalType
from numerics import INF, ONE, XRat, is_inf_weight, render_weight, weight_reciprocal

from configuration.model import OrdinaryLinePoint, TangentPencil, UnibranchPower


def _weights_text(weights):
    return "(" + ",".join(render_weight(w) for w in weights) + ")"


def _as_xrat(weight):
    return weight if isinstance(weight, XRat) else XRat(weight)


def ordinary_order(weights):
    """
    Orden de un punto con r ramas lisas transversales dos a dos.

    r = 2: b_i·b_j. r = 3: 4[Σ1/b − 1]^-2, INF si el corchete se anula.
    r = 4: INF si todos los pesos son 2. Cualquier otro caso no es admisible.

    Raises:
        InadmissibleWeights: Si el corchete es negativo o r ≥ 4 con otros pesos
    """
    r = len(weights)
    if r == 2:
        return _as_xrat(weights[0]) * _as_xrat(weights[1])
    if r == 3:
        bracket = sum((weight_reciprocal(w) for w in weights), XRat(0)) - ONE
        if bracket.sign() < 0:
            raise InadmissibleWeights(f"punto triple {_weights_text(weights)}: Σ1/b − 1 = {bracket} < 0")
        if bracket.sign() == 0:
            return INF
        return XRat(4) / (bracket ** 2)
    if r == 4 and all(not is_inf_weight(w) and w == 2 for w in weights):
        return INF
    raise InadmissibleWeights(f"punto ordinario de {r} ramas con pesos {_weights_text(weights)}")


def pencil_order(local, weights):
    """
    Orden de un haz tangente: levantamiento de Kummer de grado c de un punto
    ordinario con s+1 ramas a lo largo de su rama transversal.

    order = ordinary_order(b_1..b_s, c·t) / c, con t = 1 sin rama transversal.

    Para c ≥ 3 la fórmula es la del punto como levantamiento; local_order
    sólo la usa con tangency_orders=True.
    """
    tangent = list(weights[: local.branches])
    t = weights[-1] if local.transversal else 1
    lifted_weight = INF if is_inf_weight(t) else local.contact * t
    try:
        base = ordinary_order(tangent + [lifted_weight])
    except InadmissibleWeights:
        raise InadmissibleWeights(f"{local.code()} con pesos {_weights_text(weights)}") from None
    return base / XRat(local.contact)


def cusp_order(weight):
    """(2/3)[1/b − 1/6]^-2; INF para b = 6, no admisible para b > 6."""
    bracket = weight_reciprocal(weight) - XRat(1, 6)
    if bracket.sign() < 0:
        raise InadmissibleWeights(f"cúspide con peso {render_weight(weight)}: 1/b − 1/6 < 0")
    if bracket.sign() == 0:
        return INF
    return XRat(2, 3) / (bracket ** 2)


def is_higher_tangency(local):
    """Haz tangente con contacto ≥ 3 (incluye tangent:c)."""
    return isinstance(local, TangentPencil) and local.contact >= 3


def local_order(local, weights, tangency_orders=False):
    """
    Orden local β(p) de un punto de tipo `local` cuyas ramas tienen `weights`.

    Los haces con contacto ≥ 3 sólo tienen orden como puntos de un
    levantamiento de Kummer (pencil_order); fuera de ese contexto hay que
    pedirlo con tangency_orders=True.

    Args:
        local: OrdinaryLinePoint | TangentPencil | UnibranchPower
        weights (list): Pesos de las ramas en el orden de las incidencias
        tangency_orders (bool): Aceptar haces con contacto ≥ 3

    Returns:
        XRat: Entero positivo o INF (borde log-canónico)

    Raises:
        InadmissibleWeights: Desigualdad local violada
        NonIntegralOrder: Orden finito no entero
        UnsupportedLocalType: Contacto ≥ 3 sin tangency_orders
    """
    weights = list(weights)
    if len(weights) != local.branch_count:
        raise ValueError(f"{local.code()} requiere {local.branch_count} pesos, no {len(weights)}")
    if is_higher_tangency(local) and not tangency_orders:
        raise UnsupportedLocalType(f"{local.code()} no soportado para invariantes")
    if isinstance(local, OrdinaryLinePoint):
        order = ordinary_order(weights)
    elif isinstance(local, TangentPencil):
        order = pencil_order(local, weights)
    elif isinstance(local, UnibranchPower):
        if local.m == 3:
            order = cusp_order(weights[0])
        elif not is_inf_weight(weights[0]) and weights[0] == 2:
            order = XRat(2 * local.m)
        else:
            raise InadmissibleWeights(f"{local.code()} sólo admite peso 2, no {render_weight(weights[0])}")
    else:
        raise TypeError(f"tipo local desconocido: {local!r}")
    if order.is_finite and not order.is_integer:
        raise NonIntegralOrder(f"{local.code()} {_weights_text(weights)}: orden {order}")
    return order
