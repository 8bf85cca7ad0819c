"""
Levantamiento de configuraciones por el cubrimiento de Kummer
φ_k: [x, y, z] ↦ [x^k, y^k, z^k], ramificado sobre una terna de rectas.
"""

from dataclasses import dataclass, field
from itertools import product
from math import gcd

from errors import (
    InvalidCover,
    NonIntegralSplit,
    OrbifoldError,
    ProfileInconsistency,
    UnsupportedLocalType,
)
from numerics import INF, ONE, XRat, is_inf_weight, render_weight

from configuration import normalize, pair_intersections
from configuration.model import (
    CurveComponent,
    OrbifoldConfig,
    OrdinaryLinePoint,
    SingularPointRec,
    TangentPencil,
    UnibranchPower,
    kind_for_degree,
)
from invariants import chern_pair, classify, local_order
from .monodromy import (
    generator_vectors,
    group_elements,
    incidence_profile,
    lifted_point_count,
    monodromy_subgroup,
    subgroup,
    supergroups,
)


@dataclass(frozen=True)
class KummerCover:
    """Exponente k ≥ 2 y terna ordenada de rectas de ramificación."""

    k: int
    branch: tuple

    @property
    def degree(self):
        return self.k * self.k


@dataclass(frozen=True)
class OrderCheck:
    """β(p) = ramificación · β(q) para un punto q sobre p."""

    point_id: str
    base_id: str
    ramification: int
    base_order: XRat
    lifted_order: XRat

    @property
    def ok(self):
        return self.base_order == self.lifted_order * self.ramification


# ============================================================================
# CLASE: LiftReport
# Propósito: Resultado de un levantamiento con sus comprobaciones
# ============================================================================
@dataclass
class LiftReport:
    """
    Atributos:
        base: Configuración base normalizada
        lifted: Configuración levantada normalizada
        cover: Cubrimiento usado
        component_map: id base → ids levantados
        base_pair, lifted_pair: ChernPair de base y levantada
        order_checks: Comprobaciones de órdenes locales por punto
    """

    base: OrbifoldConfig
    lifted: OrbifoldConfig
    cover: KummerCover
    component_map: dict
    base_pair: object
    lifted_pair: object
    order_checks: list = field(default_factory=list)

    @property
    def degree(self):
        return self.cover.degree

    @property
    def euler_ok(self):
        return self.lifted_pair.euler == self.base_pair.euler * self.degree

    @property
    def c1sq_ok(self):
        return self.lifted_pair.c1sq == self.base_pair.c1sq * self.degree

    @property
    def multiplicative(self):
        return self.euler_ok and self.c1sq_ok

    @property
    def orders_ok(self):
        return all(check.ok for check in self.order_checks)

    @property
    def base_class(self):
        return classify(self.base, tangency_orders=True)

    @property
    def lifted_class(self):
        return classify(self.lifted, tangency_orders=True)

    def check_lines(self):
        """Resumen de comprobaciones en líneas 'clave=valor'."""
        passed = sum(1 for c in self.order_checks if c.ok)
        return [
            f"degree={self.degree} branch={','.join(self.cover.branch)}",
            f"euler base={self.base_pair.euler} lifted={self.lifted_pair.euler} ok={self.euler_ok}",
            f"c1sq base={self.base_pair.c1sq} lifted={self.lifted_pair.c1sq} ok={self.c1sq_ok}",
            f"orders {passed}/{len(self.order_checks)} ok={self.orders_ok}",
            f"class base={self.base_class} lifted={self.lifted_class}",
        ]


# ============================================================================
# CLASE: KummerLifter
# Propósito: Transportar componentes y puntos singulares a través de φ_k
# Responsabilidades:
#   - Partir cada componente según su subgrupo de monodromía
#   - Aplicar la tabla de transformación local de puntos
#   - Elegir qué piezas pasan por cada punto levantado sin romper Bézout
# ============================================================================
class KummerLifter:
    """
    Levantamiento de una configuración normalizada por un KummerCover.

    Sobre un punto p que no es un vértice las piezas de cada componente se
    etiquetan por clases de G = (Z/k)², pero la etiqueta relativa entre dos
    componentes que pasan por p no está fijada por la combinatoria. Para
    cada p se elige el desplazamiento de etiquetas que mantiene toda pareja
    de piezas dentro de su número de Bézout; con las intersecciones totales
    fijadas por el grado, eso fuerza la igualdad en todas las parejas.
    """

    def __init__(self, config, cover):
        self.config = normalize(config)
        self.cover = cover
        self.k = cover.k
        self._check_cover()
        self.triple = tuple(cover.branch)
        self.gens = generator_vectors(self.triple, self.k)
        self.subgroups = {}
        self.pieces = {}
        self.lifted_ids = {}
        self.degrees = {cid: 1 for cid in self.triple}
        self.raw_points = []
        self.point_origin = {}
        self.tally = {}

    # ------------------------------------------------------------------
    def _check_cover(self):
        k, branch = self.k, tuple(self.cover.branch)
        if k < 2:
            raise InvalidCover(f"k={k} debe ser ≥ 2")
        if len(branch) != 3 or len(set(branch)) != 3:
            raise InvalidCover(f"se necesitan tres rectas distintas, no {branch}")
        for cid in branch:
            if not self.config.has_component(cid):
                raise InvalidCover(f"{cid} no es una componente de peso > 1")
            comp = self.config.component(cid)
            if not comp.is_line:
                raise InvalidCover(f"{cid} no es una recta")
            if not is_inf_weight(comp.weight) and comp.weight % k != 0:
                raise InvalidCover(f"el peso {comp.weight} de {cid} no es divisible por {k}")
        for point in self.config.points:
            if all(cid in point.component_ids() for cid in branch):
                raise InvalidCover(f"las tres rectas concurren en {point.id}")
        for i in range(3):
            for j in range(i + 1, 3):
                if self._vertex(branch[i], branch[j]) is None:
                    raise InvalidCover(f"{branch[i]} y {branch[j]} no se cortan en ningún punto registrado")

    def _vertex(self, a, b):
        for point in self.config.points:
            ids = point.component_ids()
            if a in ids and b in ids:
                return point
        return None

    def _lifted_weight(self, cid):
        weight = self.config.component(cid).weight
        return INF if is_inf_weight(weight) else weight // self.k

    def _piece(self, cid, g, offsets):
        """Pieza de `cid` por la que pasa la hoja g, desplazada por offsets[cid]."""
        if cid in self.triple:
            return cid
        shift = offsets.get(cid, (0, 0))
        g = ((g[0] + shift[0]) % self.k, (g[1] + shift[1]) % self.k)
        return self.lifted_ids[cid][self.subgroups[cid].coset_index(g)]

    # ------------------------------------------------------------------
    def lift(self):
        """
        Ejecuta el levantamiento.

        Returns:
            LiftReport

        Raises:
            UnsupportedLocalType: Punto fuera de la tabla de transformación
            ProfileInconsistency: Perfil de incidencia incoherente
            NonIntegralSplit: Grado no divisible entre las componentes
        """
        for comp in self.config.components:
            if comp.id in self.triple:
                continue
            profile = incidence_profile(self.config, comp.id, self.triple)
            sub = component_subgroup(self.config, comp, profile, self.k)
            pieces = split_component(comp, profile, self.k, sub)
            self.subgroups[comp.id] = sub
            self.pieces[comp.id] = pieces
            self.lifted_ids[comp.id] = [piece.id for piece in pieces]
            self.degrees.update((piece.id, piece.degree) for piece in pieces)
        for point in self.config.points:
            for record, ramification in self._labelled(point):
                self._commit(record, point, ramification)
        raw = OrbifoldConfig(self.lifted_components(), self.raw_points, self._label())
        lifted = normalize(raw)
        base_pair = chern_pair(self.config, tangency_orders=True)
        lifted_pair = chern_pair(lifted, tangency_orders=True)
        component_map = {c.id: list(self.lifted_ids.get(c.id, [c.id])) for c in self.config.components}
        checks = self._order_checks(lifted)
        return LiftReport(self.config, lifted, self.cover, component_map, base_pair, lifted_pair, checks)

    def _label(self):
        return f"φ{self.k}[{','.join(self.triple)}]({self.config.label})"

    # ------------------------------------------------------------------
    def _labelled(self, point):
        """Puntos sobre `point` con el desplazamiento de menor exceso de Bézout."""
        movable = [cid for cid in point.component_ids() if cid not in self.triple][1:]
        choices = [self.subgroups[cid].cosets() for cid in movable]
        best = None
        for combo in product(*choices):
            records = self._records(point, dict(zip(movable, combo)))
            excess = self._excess(records)
            if best is None or excess < best[0]:
                best = (excess, records)
            if excess == 0:
                break
        return best[1]

    def _records(self, point, offsets):
        on_lines = [cid for cid in point.component_ids() if cid in self.triple]
        if not on_lines:
            return self._free(point, offsets)
        if len(on_lines) == 1:
            return self._on_line(point, on_lines[0], offsets)
        return self._at_vertex(point, on_lines, offsets)

    def _budget(self, key):
        a, b = key
        return self.degrees[a] * self.degrees[b]

    def _excess(self, records):
        delta = {}
        for record, _ in records:
            for key, mult in pair_intersections(record).items():
                delta[key] = delta.get(key, 0) + mult
        excess = 0
        for key, mult in delta.items():
            before = self.tally.get(key, 0)
            budget = self._budget(key)
            excess += max(0, before + mult - budget) - max(0, before - budget)
        return excess

    def _commit(self, record, base_point, ramification):
        self.raw_points.append(record)
        self.point_origin[record.id] = (base_point, ramification)
        for key, mult in pair_intersections(record).items():
            self.tally[key] = self.tally.get(key, 0) + mult

    # ------------------------------------------------------------------
    def _free(self, point, offsets):
        out = []
        for n, g in enumerate(group_elements(self.k), start=1):
            incidences = tuple((self._piece(cid, g, offsets), count) for cid, count in point.incidences)
            out.append((SingularPointRec(f"{point.id}_{n}", point.local_type, incidences), 1))
        return out

    def _on_line(self, point, line, offsets):
        orbit = subgroup([self.gens[line]], self.k)
        return [
            (self._over_line(point, line, g, offsets, f"{point.id}_{n}"), self.k)
            for n, g in enumerate(orbit.cosets(), start=1)
        ]

    def _over_line(self, point, line, g, offsets, pid):
        """
        Punto sobre `point` en la hoja g, con `line` la única recta de
        ramificación que pasa por él.
        """
        k = self.k
        local = point.local_type
        names = point.branches()
        g_line = self.gens[line]

        def spread(cid, count):
            steps = [((g[0] + j * g_line[0]) % k, (g[1] + j * g_line[1]) % k) for j in range(count)]
            return [self._piece(cid, h, offsets) for h in steps]

        if isinstance(local, OrdinaryLinePoint):
            ups = [self._piece(cid, g, offsets) for cid in names if cid != line]
            new = OrdinaryLinePoint(2) if len(ups) == 1 else TangentPencil(len(ups), k, True)
            return _record(pid, new, ups, [line])
        if not isinstance(local, TangentPencil):
            raise UnsupportedLocalType(f"{local.code()} sobre la recta de ramificación {line}", point.id)
        tangent = names[: local.branches]
        transversal = names[local.branches:]
        c = local.contact
        if transversal == [line]:
            ups = [self._piece(cid, g, offsets) for cid in tangent]
            return _record(pid, TangentPencil(local.branches, k * c, True), ups, [line])
        if line not in tangent:
            raise UnsupportedLocalType(f"{local.code()} sobre la recta de ramificación {line}", point.id)
        rest = [cid for cid in tangent if cid != line]
        tail = [self._piece(cid, g, offsets) for cid in transversal]
        # cada rama tangente a la recta con contacto c sube a gcd(k, c) ramas
        split = gcd(k, c)
        ups = [up for cid in rest for up in spread(cid, split)]
        if c % k == 0:
            if c // k >= 2:
                return _record(pid, TangentPencil(len(ups) + 1, c // k, bool(tail)), ups + [line], tail)
            return _record(pid, OrdinaryLinePoint(len(ups) + 1 + len(tail)), ups + [line] + tail, [])
        if k % c == 0:
            # la rama transversal pasa a ser tangente; la recta queda transversal
            return _record(pid, TangentPencil(len(ups) + len(tail), k // c, True), ups + tail, [line])
        if local.is_tacnode and k % 2 == 1:
            if self._lifted_weight(line) == 1:
                return _record(pid, UnibranchPower(k), [self._piece(rest[0], g, offsets)], [])
            raise UnsupportedLocalType(
                f"tacnodo sobre {line} con k={k} impar y peso levantado {render_weight(self._lifted_weight(line))}",
                point.id,
            )
        raise UnsupportedLocalType(f"{local.code()} sobre la recta de ramificación {line} con k={k}", point.id)

    def _at_vertex(self, point, lines, offsets):
        if len(lines) != 2 or not isinstance(point.local_type, OrdinaryLinePoint):
            raise UnsupportedLocalType(f"vértice de tipo {point.local_type.code()}", point.id)
        first, second = lines
        diagonal = (
            (self.gens[first][0] + self.gens[second][0]) % self.k,
            (self.gens[first][1] + self.gens[second][1]) % self.k,
        )
        ups = []
        for cid in point.branches():
            if cid in lines:
                continue
            for h in subgroup([diagonal], self.k).cosets():
                ups.append(self._piece(cid, h, offsets))
        local = OrdinaryLinePoint(len(ups) + 2)
        return [(_record(point.id, local, ups, [first, second]), self.k * self.k)]

    # ------------------------------------------------------------------
    def lifted_components(self):
        """Componentes de la configuración levantada, antes de normalizar."""
        out = []
        for comp in self.config.components:
            if comp.id in self.triple:
                out.append(CurveComponent(comp.id, 1, 2, self._lifted_weight(comp.id), "line"))
            else:
                out.extend(self.pieces[comp.id])
        return out

    def _order_checks(self, lifted):
        checks = []
        kept = {p.id: p for p in lifted.points}
        for point in self.raw_points:
            base, ramification = self.point_origin[point.id]
            try:
                base_order = local_order(base.local_type, self.config.weights_at(base), tangency_orders=True)
                if point.id in kept:
                    up = kept[point.id]
                    lifted_order = local_order(up.local_type, lifted.weights_at(up), tangency_orders=True)
                else:
                    lifted_order = _smooth_order(point, lifted)
            except OrbifoldError:
                continue
            checks.append(OrderCheck(point.id, base.id, ramification, base_order, lifted_order))
        return checks


def _merge(branches):
    counts = {}
    for cid in branches:
        counts[cid] = counts.get(cid, 0) + 1
    return tuple(counts.items())


def _record(pid, local, branches, tail):
    """Punto levantado; `branches` agrupadas por componente y `tail` al final, una rama cada una."""
    return SingularPointRec(pid, local, _merge(branches) + tuple((cid, 1) for cid in tail))


def _smooth_order(point, lifted):
    """Orden de un punto que deja de ser singular: 1, o el peso de la única rama pesada."""
    remaining = [cid for cid in point.branches() if lifted.has_component(cid)]
    if not remaining:
        return ONE
    if len(remaining) == 1:
        weight = lifted.component(remaining[0]).weight
        return weight if isinstance(weight, XRat) else XRat(weight)
    raise ProfileInconsistency(f"{point.id}: {len(remaining)} ramas pesadas en un punto liso")


def lift_config(config, cover):
    """
    Levanta una configuración por φ_k.

    Args:
        config (OrbifoldConfig): Configuración base
        cover (KummerCover): k y terna ordenada de rectas

    Returns:
        LiftReport: Con la configuración levantada normalizada y las comprobaciones
    """
    return KummerLifter(config, cover).lift()


# ============================================================================
# PARTICIÓN DE COMPONENTES
# ============================================================================
def split_component(component, profile, k, sub=None):
    """
    Piezas de φ_k⁻¹(C) calculadas sólo a partir del perfil de incidencia.

    Cada pieza tiene grado k·d/[G:H] y
        e = |H|·(e(C) − n) + (Σ_p puntos sobre p) / [G:H]
    con n los puntos de C sobre Δ. Los pesos se conservan (sin normalizar).

    Args:
        component (CurveComponent): Componente no ramificada
        profile (IncidenceProfile): Su perfil con la terna de ramificación
        k (int): Exponente del cubrimiento
        sub (SubgroupDescriptor): H; por defecto el subgrupo de monodromía del perfil

    Returns:
        list[CurveComponent]: Una por clase de G/H

    Raises:
        NonIntegralSplit: Grado o puntos no divisibles entre las piezas
        ProfileInconsistency: Grado y característica de Euler incompatibles con el tipo
    """
    if sub is None:
        sub = monodromy_subgroup(profile, k)
    if (k * component.degree) % sub.index:
        raise NonIntegralSplit(f"{component.id}: grado {k * component.degree} entre {sub.index} componentes")
    gens = generator_vectors(profile.triple, k)
    lines_at = {}
    for branch in profile.branches:
        lines_at.setdefault(branch.point_id, set()).update(cid for cid, _ in branch.contacts)
    total = sum(lifted_point_count([gens[cid] for cid in sorted(lines)], sub) for lines in lines_at.values())
    if total % sub.index:
        raise NonIntegralSplit(f"{component.id}: {total} puntos entre {sub.index} componentes")
    degree = k * component.degree // sub.index
    euler = len(sub.elements) * (component.euler_set - len(lines_at)) + total // sub.index
    if sub.index == 1:
        ids = [component.id]
    else:
        ids = [f"{component.id}_{n}" for n in range(1, sub.index + 1)]
    try:
        return [CurveComponent(cid, degree, euler, component.weight, kind_for_degree(degree)) for cid in ids]
    except ValueError as exc:
        raise ProfileInconsistency(f"{component.id}: {exc}") from exc


def is_rational(config, component_id):
    """Normalización de género 0: e(C) + Σ_p (ramas de C en p − 1) = 2."""
    comp = config.component(component_id)
    extra = sum(p.branches_on(component_id) - 1 for p in config.points_on(component_id))
    return comp.euler_set + extra == 2


def _plane_curve_like(piece):
    d, e = piece.degree, piece.euler_set
    if d <= 2:
        return e == 2
    return 3 * d - d * d <= e <= 2


def component_subgroup(config, component, profile, k):
    """
    H_C para una componente de la configuración.

    Para C racional es el subgrupo de monodromía de los lazos locales. Si C
    tiene género positivo esos lazos no generan π₁ de C ∖ Δ y se toma el
    menor supergrupo cuyas piezas son curvas planas posibles: grado ≤ 2 con
    e = 2, o 3d − d² ≤ e ≤ 2.
    """
    sub = monodromy_subgroup(profile, k)
    if is_rational(config, component.id):
        return sub
    for candidate in supergroups(sub):
        try:
            pieces = split_component(component, profile, k, candidate)
        except (NonIntegralSplit, ProfileInconsistency):
            continue
        if all(_plane_curve_like(piece) for piece in pieces):
            return candidate
    return subgroup([(1, 0), (0, 1)], k)


def lifted_pieces(config, component_id, cover):
    """
    Piezas levantadas de una componente de la configuración, sin levantar
    sus puntos.

    Returns:
        list[CurveComponent]
    """
    config = normalize(config)
    profile = incidence_profile(config, component_id, tuple(cover.branch))
    component = config.component(component_id)
    sub = component_subgroup(config, component, profile, cover.k)
    return split_component(component, profile, cover.k, sub)
