"""
Modelo de datos de configuraciones de curvas pesadas en el plano proyectivo.

La geometría es puramente combinatoria: no se guardan coordenadas. Cada
componente lleva grado, característica de Euler de su conjunto de puntos,
peso y tipo; cada punto singular lleva su tipo local y sus incidencias.
"""

from dataclasses import dataclass, field, replace

from errors import DuplicateId, UnknownComponent
from numerics import INF, is_inf_weight, render_weight, weight_key


KINDS = ("line", "quadric", "general")


# ============================================================================
# TIPOS LOCALES
# ============================================================================
@dataclass(frozen=True)
class OrdinaryLinePoint:
    """r ramas lisas dos a dos transversales (nodo r=2, punto triple r=3)."""

    r: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"punto ordinario con {self.r} ramas")

    @property
    def branch_count(self):
        return self.r

    def code(self):
        if self.r == 2:
            return "node"
        if self.r == 3:
            return "triple"
        return f"ordinary:{self.r}"

    def key(self):
        return (0, self.r, 0, 0)


@dataclass(frozen=True)
class TangentPencil:
    """
    `branches` ramas lisas tangentes dos a dos con orden de contacto `contact`,
    más opcionalmente una rama transversal a todas (la última incidencia).
    """

    branches: int
    contact: int
    transversal: bool = False

    def __post_init__(self):
        if self.branches < 2 or self.contact < 2:
            raise ValueError(f"haz tangente inválido: {self.branches} ramas, contacto {self.contact}")

    @property
    def branch_count(self):
        return self.branches + (1 if self.transversal else 0)

    @property
    def is_tacnode(self):
        return self.branches == 2 and self.contact == 2 and not self.transversal

    def code(self):
        if self.is_tacnode:
            return "tacnode"
        if self.branches == 2 and not self.transversal:
            return f"tangent:{self.contact}"
        suffix = ":t" if self.transversal else ""
        return f"pencil:{self.branches}:{self.contact}{suffix}"

    def key(self):
        return (1, self.branches, self.contact, int(self.transversal))


@dataclass(frozen=True)
class UnibranchPower:
    """Singularidad unirrama de modelo x² = y^m (m impar ≥ 3; m=3 es la cúspide)."""

    m: int

    def __post_init__(self):
        if self.m < 3 or self.m % 2 == 0:
            raise ValueError(f"x²=y^m requiere m impar ≥ 3, no {self.m}")

    @property
    def branch_count(self):
        return 1

    def code(self):
        return "cusp" if self.m == 3 else f"power:{self.m}"

    def key(self):
        return (2, self.m, 0, 0)


def Node():
    return OrdinaryLinePoint(2)


def TransversalTriple():
    return OrdinaryLinePoint(3)


def Tacnode():
    return TangentPencil(2, 2)


def HigherTacnode(contact):
    return TangentPencil(2, contact)


def SimpleCusp():
    return UnibranchPower(3)


def parse_local_type(code):
    """
    Traduce el código textual de un tipo local.

    Args:
        code (str): node | tacnode | triple | cusp | power:<m> | ordinary:<r> |
            tangent:<c> | pencil:<s>:<c>[:t]

    Returns:
        OrdinaryLinePoint | TangentPencil | UnibranchPower

    Raises:
        ValueError: Código desconocido o parámetros inválidos
    """
    simple = {
        "node": Node,
        "triple": TransversalTriple,
        "tacnode": Tacnode,
        "cusp": SimpleCusp,
    }
    if code in simple:
        return simple[code]()
    head, _, rest = code.partition(":")
    args = rest.split(":") if rest else []
    if head == "power" and len(args) == 1:
        return UnibranchPower(int(args[0]))
    if head == "ordinary" and len(args) == 1:
        return OrdinaryLinePoint(int(args[0]))
    if head == "tangent" and len(args) == 1:
        return HigherTacnode(int(args[0]))
    if head == "pencil" and len(args) in (2, 3):
        if len(args) == 3 and args[2] != "t":
            raise ValueError(f"sufijo de haz desconocido: {args[2]}")
        return TangentPencil(int(args[0]), int(args[1]), len(args) == 3)
    raise ValueError(f"tipo local desconocido: {code}")


# ============================================================================
# COMPONENTES Y PUNTOS
# ============================================================================
@dataclass(frozen=True)
class CurveComponent:
    """
    Componente irreducible B_i del divisor.

    Atributos:
        id: Identificador opaco
        degree: Grado d_i
        euler_set: Característica de Euler del conjunto de puntos e(B_i)
        weight: Peso b_i (entero ≥ 1 o INF)
        kind: line | quadric | general
    """

    id: str
    degree: int
    euler_set: int
    weight: object
    kind: str = "general"

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"{self.id}: grado {self.degree}")
        if self.kind not in KINDS:
            raise ValueError(f"{self.id}: tipo desconocido {self.kind}")
        if self.kind == "line" and (self.degree, self.euler_set) != (1, 2):
            raise ValueError(f"{self.id}: una recta tiene grado 1 y euler 2")
        if self.kind == "quadric" and (self.degree, self.euler_set) != (2, 2):
            raise ValueError(f"{self.id}: una cuádrica tiene grado 2 y euler 2")
        if not is_inf_weight(self.weight) and (not isinstance(self.weight, int) or self.weight < 1):
            raise ValueError(f"{self.id}: peso inválido {self.weight}")

    @property
    def is_line(self):
        return self.kind == "line"

    def signature(self):
        """Clave de isomorfismo (grado, euler, peso, tipo)."""
        return (self.degree, self.euler_set, weight_key(self.weight), self.kind)

    def with_weight(self, weight):
        return replace(self, weight=weight)


def kind_for_degree(degree):
    """Tipo derivado del grado de una componente irreducible lisa."""
    return {1: "line", 2: "quadric"}.get(degree, "general")


@dataclass(frozen=True)
class SingularPointRec:
    """
    Punto p ∈ sing(B).

    Atributos:
        id: Identificador opaco
        local_type: Tipo local (OrdinaryLinePoint, TangentPencil, UnibranchPower)
        incidences: Tupla de (id de componente, número de ramas ≥ 1)
    """

    id: str
    local_type: object
    incidences: tuple

    def __post_init__(self):
        object.__setattr__(self, "incidences", tuple((cid, int(n)) for cid, n in self.incidences))
        for cid, count in self.incidences:
            if count < 1:
                raise ValueError(f"punto {self.id}: {count} ramas sobre {cid}")
        if self.branch_total() != self.local_type.branch_count:
            raise ValueError(
                f"punto {self.id}: {self.branch_total()} ramas, "
                f"el tipo {self.local_type.code()} requiere {self.local_type.branch_count}"
            )
        if isinstance(self.local_type, TangentPencil) and self.local_type.transversal:
            if self.incidences[-1][1] != 1:
                raise ValueError(f"punto {self.id}: la rama transversal va sola y al final")

    def branch_total(self):
        return sum(count for _, count in self.incidences)

    def component_ids(self):
        """Componentes distintas que pasan por el punto, en orden de aparición."""
        seen = []
        for cid, _ in self.incidences:
            if cid not in seen:
                seen.append(cid)
        return seen

    def branches(self):
        """Lista expandida de ids, una entrada por rama (la transversal al final)."""
        out = []
        for cid, count in self.incidences:
            out.extend([cid] * count)
        return out

    def branches_on(self, component_id):
        return sum(count for cid, count in self.incidences if cid == component_id)


# ============================================================================
# CLASE: OrbifoldConfig
# Propósito: Divisor B = b₁B₁+…+b_nB_n con su inventario de puntos singulares
# Responsabilidades:
#   - Garantizar ids únicos y referencias resueltas
#   - Responder consultas de incidencia para el motor de invariantes
# ============================================================================
@dataclass(frozen=True)
class OrbifoldConfig:
    """Configuración pesada inmutable sobre el plano proyectivo."""

    components: tuple = ()
    points: tuple = ()
    label: str = ""
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "points", tuple(self.points))
        index = {}
        for comp in self.components:
            if comp.id in index:
                raise DuplicateId(f"componente repetida: {comp.id}")
            index[comp.id] = comp
        point_ids = set()
        for point in self.points:
            if point.id in point_ids:
                raise DuplicateId(f"punto repetido: {point.id}")
            point_ids.add(point.id)
            for cid, _ in point.incidences:
                if cid not in index:
                    raise UnknownComponent(f"punto {point.id}: componente no declarada {cid}")
        object.__setattr__(self, "_index", index)

    def component(self, component_id):
        return self._index[component_id]

    def has_component(self, component_id):
        return component_id in self._index

    def point(self, point_id):
        for point in self.points:
            if point.id == point_id:
                return point
        raise KeyError(point_id)

    def points_on(self, component_id):
        """Puntos singulares que yacen sobre la componente."""
        return [p for p in self.points if any(cid == component_id for cid, _ in p.incidences)]

    def open_euler(self, component_id):
        """e(B_i ∖ sing B): euler_set menos los puntos sobre B_i (cada uno una vez)."""
        return self.component(component_id).euler_set - len(self.points_on(component_id))

    def weights_at(self, point):
        """Pesos de las ramas del punto, en el orden de sus incidencias."""
        return [self.component(cid).weight for cid in point.branches()]

    def lines(self):
        return [c for c in self.components if c.is_line]

    def total_degree(self):
        return sum(c.degree for c in self.components)

    def locus_degree(self):
        """Grado del lugar: suma de grados de componentes con peso > 1."""
        return sum(c.degree for c in self.components if is_inf_weight(c.weight) or c.weight > 1)

    def with_label(self, label):
        return OrbifoldConfig(self.components, self.points, label)

    def summary(self):
        """Resumen corto: componentes con peso y recuento de tipos locales."""
        comps = " + ".join(f"{render_weight(c.weight)}{c.id}" for c in self.components) or "∅"
        counts = {}
        for point in self.points:
            counts[point.local_type.code()] = counts.get(point.local_type.code(), 0) + 1
        types = ", ".join(f"{n}×{code}" for code, n in sorted(counts.items()))
        return f"{comps}; {types}" if types else comps


EMPTY = OrbifoldConfig(label="plano proyectivo")


# ============================================================================
# CLASIFICACIÓN
# ============================================================================
CLASS_NAMES = ("Flat", "BallCandidate", "PolydiskCandidate", "Spherical", "ZeroC1", "Other")


@dataclass(frozen=True)
class ClassTag:
    """Etiqueta de clasificación (condición necesaria, nunca una prueba)."""

    name: str
    note: str = ""

    def __post_init__(self):
        if self.name not in CLASS_NAMES:
            raise ValueError(f"etiqueta desconocida: {self.name}")

    def __str__(self):
        return self.name


__all__ = [
    "CLASS_NAMES", "ClassTag",
    "INF", "KINDS", "OrdinaryLinePoint", "TangentPencil", "UnibranchPower",
    "Node", "TransversalTriple", "Tacnode", "HigherTacnode", "SimpleCusp",
    "parse_local_type", "CurveComponent", "kind_for_degree", "SingularPointRec",
    "OrbifoldConfig", "EMPTY",
]
