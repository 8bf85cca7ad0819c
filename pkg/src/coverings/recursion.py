"""
Construcciones iteradas y contabilidad de grados de cubrimientos.
"""

from dataclasses import dataclass
from itertools import combinations, product

from errors import (
    EvenM,
    UnsupportedLocalType,
    UnsupportedShape,
)
from numerics import ONE, XRat, is_inf_weight, weight_reciprocal

from configuration import build_apollonius, build_preset, build_qm, normalize
from configuration.model import OrdinaryLinePoint
from invariants import canonical_slope, chern_pair, euler_orbifold, local_order, triangle_class
from .lift import KummerCover, lift_config


def initial_theorem1():
    """O₁ = C₂(4,4,4,4;2,2,2)."""
    return build_preset("C2_family", [4, 4, 4, 4, 2, 2, 2])


@dataclass(frozen=True)
class BranchCandidate:
    """
    Terna de ramificación junto con sus tres rectas rojas.

    Atributos:
        triple: Rectas de ramificación, en orden de ids
        reds: Una recta por vértice de la terna, concurrentes fuera de ella
        rank: Clave de ordenación
    """

    triple: tuple
    reds: tuple
    rank: tuple


def _vertices(config, triple):
    """Vértices de la terna (ab, ac, bc) o None si no forman un triángulo de puntos ordinarios."""
    vertices = []
    for a, b in combinations(triple, 2):
        shared = [p for p in config.points if a in p.component_ids() and b in p.component_ids()]
        if len(shared) != 1 or not isinstance(shared[0].local_type, OrdinaryLinePoint):
            return None
        vertices.append(shared[0])
    if len({p.id for p in vertices}) != 3:
        return None
    return vertices


def _concurrent(config, reds, triple):
    """¿Hay un punto por las tres rojas que no esté en ninguna recta de la terna?"""
    for point in config.points:
        ids = set(point.component_ids())
        if ids.issuperset(reds) and not ids.intersection(triple):
            return True
    return False


def _reds(config, triple, vertices, line_ids, previous_reds):
    options = [[cid for cid in p.component_ids() if cid in line_ids and cid not in triple] for p in vertices]
    best = None
    for reds in product(*options):
        if len(set(reds)) != 3 or not _concurrent(config, reds, triple):
            continue
        key = (sum(1 for cid in tuple(triple) + reds if cid not in previous_reds), tuple(sorted(reds)))
        if best is None or key < best:
            best = key
    return best


def theorem1_candidates(config, previous_branch=(), previous_reds=()):
    """
    Ternas de ramificación con k = 2 para el paso siguiente de la serie.

    Una terna son tres rectas de peso par que se cortan dos a dos en tres
    puntos ordinarios distintos. Por cada vértice pasa una recta roja ajena a
    la terna y las tres rojas concurren en un punto fuera de ella, de modo
    que terna y rojas forman un cuadrilátero completo.

    Orden: suma de pesos, rectas de la terna que ya ramificaban en el paso
    anterior, rectas del cuadrilátero que no proceden de las rojas
    anteriores, ids.

    Args:
        config (Configuration): Configuración del paso actual
        previous_branch (tuple): Terna del paso anterior
        previous_reds (tuple): Ids levantados de las rojas del paso anterior

    Returns:
        list[BranchCandidate]: Candidatas ordenadas
    """
    previous_branch = set(previous_branch)
    previous_reds = set(previous_reds)
    weights = {c.id: c.weight for c in config.lines()}
    even = sorted(cid for cid, w in weights.items() if not is_inf_weight(w) and w % 2 == 0)
    found = []
    for triple in combinations(even, 3):
        vertices = _vertices(config, triple)
        if vertices is None:
            continue
        best = _reds(config, triple, vertices, set(weights), previous_reds)
        if best is None:
            continue
        outside, reds = best
        rank = (sum(weights[cid] for cid in triple), sum(1 for cid in triple if cid in previous_branch), outside, triple)
        found.append(BranchCandidate(triple, reds, rank))
    return sorted(found, key=lambda c: c.rank)


def theorem1_iterate(steps):
    """
    Serie O₁ → O₂ → … de levantamientos con k = 2.

    Cada paso levanta por la primera terna candidata; las rojas levantadas
    guían la elección del paso siguiente.

    Args:
        steps (int): Número de pasos (≥ 1)

    Returns:
        list[LiftReport]: Un informe por paso

    Raises:
        UnsupportedLocalType: Si no queda ninguna terna candidata
    """
    if steps < 1:
        raise ValueError("steps debe ser ≥ 1")
    current = initial_theorem1()
    branch, reds = (), ()
    reports = []
    for step in range(1, steps + 1):
        candidates = theorem1_candidates(current, branch, reds)
        if not candidates:
            raise UnsupportedLocalType(f"paso {step}: ninguna terna candidata")
        chosen = candidates[0]
        report = lift_config(current, KummerCover(2, chosen.triple))
        reports.append(report)
        branch = chosen.triple
        reds = tuple(cid for red in chosen.reds for cid in report.component_map[red])
        current = report.lifted
    return reports


@dataclass(frozen=True)
class Theorem2Record:
    """Grados de la uniformización Q_m × Q_m → (P², β_m)."""

    m: int
    deg_f: int
    deg_zeta: int
    deg_psi_zeta: int
    deg_phi: int
    final_degree: int
    genus: int
    euler_orbifold: XRat

    @property
    def degrees_consistent(self):
        return self.deg_psi_zeta == self.deg_phi * self.final_degree

    @property
    def euler_identity(self):
        """2m²·e(P², β_m) = e(Q_m × Q_m) = (2 − 2g)²."""
        return self.euler_orbifold * self.final_degree == XRat((2 - 2 * self.genus) ** 2)


def theorem2_bookkeeping(m):
    """
    Raises:
        EvenM: Si m es par
    """
    if m < 1 or m % 2 == 0:
        raise EvenM(f"m={m} debe ser impar y positivo")
    return Theorem2Record(
        m=m,
        deg_f=m ** 2,
        deg_zeta=m ** 4,
        deg_psi_zeta=2 * m ** 4,
        deg_phi=m ** 2,
        final_degree=2 * m ** 2,
        genus=(m - 1) * (m - 2) // 2,
        euler_orbifold=euler_orbifold(build_qm(m)),
    )


@dataclass(frozen=True)
class FirstLiftingRecord:
    """deg f, deg ζ = deg f², deg ξ = 2·deg f² = |π₁^orb(A(2; bs))|."""

    weights: tuple
    deg_f: int
    deg_zeta: int
    deg_xi: int


def first_lifting_degrees(bs):
    """
    Grados del primer levantamiento de A(2; bs) en el caso esférico.

    deg f = b si n = 2 (b_1 = b_2 = b); deg f = 2[Σ1/b − 1]^-1 si n = 3.

    Raises:
        UnsupportedShape: Pesos no esféricos o fuera de n ∈ {2, 3}
    """
    bs = list(bs)
    shape = triangle_class(bs)
    if shape.name != "Spherical" or len(bs) not in (2, 3):
        raise UnsupportedShape(f"{bs}: se necesita un caso esférico con n ∈ {{2, 3}}")
    if len(bs) == 2:
        deg_f = bs[0]
    else:
        value = XRat(2) / (shape.sigma - ONE)
        if not value.is_integer:
            raise UnsupportedShape(f"{bs}: grado {value} no entero")
        deg_f = value.numerator
    return FirstLiftingRecord(tuple(bs), deg_f, deg_f ** 2, 2 * deg_f ** 2)


def weight_swap_lift(b):
    """
    φ₂ sobre T₁, T₂, T₃ de A(b; 2,2,2,2).

    La cónica se parte en cuatro rectas de peso b, T₄ sube a una cónica de
    peso 2 y las rectas de ramificación quedan con peso 1; normalizada, la
    configuración es A(2; b,b,b,b).
    """
    return lift_config(build_apollonius(b, [2, 2, 2, 2]), KummerCover(2, ("T1", "T2", "T3")))


@dataclass(frozen=True)
class ModularCoverRecord:
    """|π| = 4a³, e(M_a) = a(a²−4a+6), c1²(M_a) = a(4−a)² frente a grado·invariantes de A(a;2,2,2)."""

    a: int
    group_order: int
    euler_cover: int
    c1sq_cover: int
    euler_base: XRat
    c1sq_base: XRat

    @property
    def consistent(self):
        return (
            self.euler_base * self.group_order == self.euler_cover
            and self.c1sq_base * self.group_order == self.c1sq_cover
        )


def modular_cover_record(a):
    a = int(a)
    pair = chern_pair(build_apollonius(a, [2, 2, 2]))
    return ModularCoverRecord(
        a=a,
        group_order=4 * a ** 3,
        euler_cover=a * (a * a - 4 * a + 6),
        c1sq_cover=a * (4 - a) ** 2,
        euler_base=pair.euler,
        c1sq_base=pair.c1sq,
    )


@dataclass(frozen=True)
class K3Check:
    """
    Orbifold uniformizada por una K3: c1² = 0 y e·grado = 24.

    La cuenta se guarda desglosada:
        e = 3 − curve_sum − order_sum
        curve_sum = Σ(1 − 1/b_i)·e(B_i ∖ sing B)
        order_sum = Σ_p (1 − 1/β(p))
        c1² = slope², grado = 24 / e
    """

    name: str
    weights: tuple
    cover_degree: int
    euler: XRat
    c1sq: XRat
    curve_sum: XRat
    order_sum: XRat
    slope: XRat

    @property
    def derived_degree(self):
        return XRat(24) / self.euler

    @property
    def ok(self):
        return (
            self.euler == XRat(3) - self.curve_sum - self.order_sum
            and self.c1sq == self.slope ** 2
            and self.c1sq == 0
            and self.derived_degree == self.cover_degree
        )

    def derivation(self):
        """Desglose en texto, tal y como se guarda en k3.json."""
        return {
            "curve_sum": str(self.curve_sum),
            "order_sum": str(self.order_sum),
            "slope": str(self.slope),
        }


K3_CASES = (
    ("E1", (6, 6, 6, 2, 1, 1), 72),
    ("E2", (4, 4, 4, 4, 1, 1), 64),
    ("E3", (2, 2, 2, 2, 2, 2), 32),
)


def k3_checks():
    """E₁, E₂, E₃ sobre seis rectas en posición general."""
    out = []
    for name, weights, degree in K3_CASES:
        config = normalize(build_preset("six_general_lines", list(weights)))
        curve_sum = sum(
            ((ONE - weight_reciprocal(c.weight)) * XRat(config.open_euler(c.id)) for c in config.components),
            XRat(0),
        )
        order_sum = sum(
            (ONE - local_order(p.local_type, config.weights_at(p)).reciprocal() for p in config.points),
            XRat(0),
        )
        pair = chern_pair(config)
        out.append(
            K3Check(name, weights, degree, pair.euler, pair.c1sq, curve_sum, order_sum, canonical_slope(config))
        )
    return out
