"""
Normalización, validación e isomorfismo de configuraciones.
"""

from dataclasses import dataclass
from itertools import permutations, product

from errors import InadmissibleWeights, NonIntegralOrder, UnsupportedLocalType
from numerics import is_inf_weight

from .model import (
    OrbifoldConfig,
    OrdinaryLinePoint,
    SingularPointRec,
    TangentPencil,
    UnibranchPower,
)


def _is_weight_one(weight):
    return not is_inf_weight(weight) and weight == 1


# ============================================================================
# NORMALIZACIÓN
# ============================================================================
def normalize(config):
    """
    Elimina las componentes de peso 1 y vuelve a tipar los puntos afectados.

    Reglas de retipado:
        - OrdinaryLinePoint(r) pasa a OrdinaryLinePoint(r′); se descarta si r′ ≤ 1
        - Un haz tangente con s′ ≥ 2 ramas tangentes sigue siendo haz
        - Con s′ = 1 y rama transversal queda un nodo; si no, el punto es liso
        - Una singularidad unirrama desaparece con su componente

    Args:
        config (OrbifoldConfig): Configuración estructuralmente válida

    Returns:
        OrbifoldConfig: Configuración sin componentes de peso 1 (idempotente)
    """
    removed = {c.id for c in config.components if _is_weight_one(c.weight)}
    if not removed:
        return config
    components = [c for c in config.components if c.id not in removed]
    points = []
    for point in config.points:
        retyped = _retype(point, removed)
        if retyped is not None:
            points.append(retyped)
    return OrbifoldConfig(components, points, config.label)


def _retype(point, removed):
    kept = tuple((cid, n) for cid, n in point.incidences if cid not in removed)
    if len(kept) == len(point.incidences):
        return point
    local = point.local_type
    if isinstance(local, OrdinaryLinePoint):
        total = sum(n for _, n in kept)
        if total <= 1:
            return None
        return SingularPointRec(point.id, OrdinaryLinePoint(total), kept)
    if isinstance(local, TangentPencil):
        tangent = point.incidences[:-1] if local.transversal else point.incidences
        tangent = tuple((cid, n) for cid, n in tangent if cid not in removed)
        transversal = ()
        if local.transversal and point.incidences[-1][0] not in removed:
            transversal = (point.incidences[-1],)
        s = sum(n for _, n in tangent)
        if s >= 2:
            return SingularPointRec(
                point.id, TangentPencil(s, local.contact, bool(transversal)), tangent + transversal
            )
        if s == 1 and transversal:
            return SingularPointRec(point.id, OrdinaryLinePoint(2), _merge(tangent + transversal))
        return None
    # unirrama: su única componente fue eliminada
    return None


def _merge(incidences):
    counts = {}
    for cid, n in incidences:
        counts[cid] = counts.get(cid, 0) + n
    return tuple(counts.items())


# ============================================================================
# VALIDACIÓN
# ============================================================================
@dataclass(frozen=True)
class Violation:
    """Violación de admisibilidad: kind ∈ {inadmissible, non_integral, unsupported, structure, bezout}."""

    point_id: str
    kind: str
    message: str

    def __str__(self):
        return f"{self.point_id}: {self.kind}: {self.message}"


def validate(config, tangency_orders=False):
    """
    Comprueba la admisibilidad orbifold de una configuración normalizada.

    Los puntos con orden INF (borde log-canónico) son admisibles y no se
    listan; ver boundary_points(). Los haces con contacto ≥ 3 se listan como
    "unsupported" salvo con tangency_orders=True.

    Args:
        config (OrbifoldConfig): Configuración normalizada
        tangency_orders (bool): Aceptar haces con contacto ≥ 3

    Returns:
        list[Violation]: Vacía si todos los puntos son admisibles
    """
    from invariants.local_orders import local_order

    violations = []
    for point in config.points:
        violations.extend(_structure(config, point))
        try:
            local_order(point.local_type, config.weights_at(point), tangency_orders)
        except UnsupportedLocalType as exc:
            violations.append(Violation(point.id, "unsupported", str(exc)))
        except InadmissibleWeights as exc:
            violations.append(Violation(point.id, "inadmissible", str(exc)))
        except NonIntegralOrder as exc:
            violations.append(Violation(point.id, "non_integral", str(exc)))
    violations.extend(_bezout(config))
    return violations


def boundary_points(config, tangency_orders=False):
    """
    Puntos cuyo orden local es INF.

    Returns:
        list[str]: Ids de los puntos de borde, en orden del documento
    """
    from invariants.local_orders import local_order

    found = []
    for point in config.points:
        try:
            order = local_order(point.local_type, config.weights_at(point), tangency_orders)
        except (InadmissibleWeights, NonIntegralOrder, UnsupportedLocalType):
            continue
        if order.is_inf:
            found.append(point.id)
    return found


def _structure(config, point):
    out = []
    for cid, count in point.incidences:
        comp = config.component(cid)
        if comp.kind in ("line", "quadric"):
            if count > 1:
                out.append(Violation(point.id, "structure", f"{cid} es lisa y tiene {count} ramas aquí"))
            if isinstance(point.local_type, UnibranchPower):
                out.append(Violation(point.id, "structure", f"{cid} es lisa y no admite {point.local_type.code()}"))
    return out


def pair_intersections(point):
    """
    Multiplicidad de intersección local entre cada par de componentes distintas.

    Returns:
        dict: (id_a, id_b) ordenado → multiplicidad en este punto
    """
    local = point.local_type
    branches = point.branches()
    if isinstance(local, UnibranchPower):
        return {}
    contact = {}
    count = len(branches)
    for i in range(count):
        for j in range(i + 1, count):
            a, b = branches[i], branches[j]
            if a == b:
                continue
            mult = 1
            if isinstance(local, TangentPencil) and j < local.branches:
                mult = local.contact
            key = tuple(sorted((a, b)))
            contact[key] = contact.get(key, 0) + mult
    return contact


def _bezout(config):
    totals = {}
    for point in config.points:
        for key, mult in pair_intersections(point).items():
            totals[key] = totals.get(key, 0) + mult
    out = []
    for (a, b), total in sorted(totals.items()):
        budget = config.component(a).degree * config.component(b).degree
        if total > budget:
            out.append(Violation(f"{a}·{b}", "bezout", f"intersección {total} > {budget}"))
    return out


# ============================================================================
# ISOMORFISMO
# ============================================================================
def canonical_form(config):
    """
    Forma canónica: mínimo lexicográfico de la codificación sobre todas las
    ordenaciones de componentes compatibles con su firma refinada.
    """
    refined = {}
    for comp in config.components:
        profile = sorted(p.local_type.key() + (p.branches_on(comp.id),) for p in config.points_on(comp.id))
        refined[comp.id] = (comp.signature(), tuple(profile))
    groups = {}
    for cid in sorted(refined, key=lambda c: refined[c]):
        groups.setdefault(refined[cid], []).append(cid)
    ordered_keys = sorted(groups)
    header = tuple((key, len(groups[key])) for key in ordered_keys)

    best = None
    choices = [permutations(groups[key]) for key in ordered_keys]
    for combo in product(*choices):
        index = {}
        for block in combo:
            for cid in block:
                index[cid] = len(index)
        encoded = tuple(sorted(_encode_point(p, index) for p in config.points))
        if best is None or encoded < best:
            best = encoded
    return header, best or ()


def _encode_point(point, index):
    local = point.local_type
    incidences = [(index[cid], n) for cid, n in point.incidences]
    tail = ()
    if isinstance(local, TangentPencil) and local.transversal:
        tail = (incidences.pop(),)
    return local.key(), tuple(sorted(incidences)), tail


def iso_check(a, b):
    """
    Decide si dos configuraciones normalizadas son isomorfas.

    Returns:
        bool: True si existe una biyección de componentes y de puntos que
        conserva firmas, tipos locales e incidencias
    """
    if len(a.components) != len(b.components) or len(a.points) != len(b.points):
        return False
    return canonical_form(a) == canonical_form(b)
