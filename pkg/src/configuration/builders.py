"""
Constructores de las familias de configuraciones con nombre.
"""

from errors import EvenM, NegativeGenus, PresetError

from .model import (
    CurveComponent,
    OrbifoldConfig,
    SingularPointRec,
    Node,
    SimpleCusp,
    Tacnode,
    TransversalTriple,
    UnibranchPower,
    kind_for_degree,
)
from numerics import render_weight


def _line(cid, weight):
    return CurveComponent(cid, 1, 2, weight, "line")


def _weights_label(weights):
    return ",".join(render_weight(w) for w in weights)


def build_apollonius(a, bs):
    """
    Cuádrica Q de peso a con n rectas tangentes T_1..T_n de pesos bs.

    Args:
        a (int | XRat): Peso de la cuádrica
        bs (list): Pesos de las rectas tangentes

    Returns:
        OrbifoldConfig: n tacnodos Q∩T_i y n(n−1)/2 nodos T_i∩T_j
    """
    bs = list(bs)
    components = [CurveComponent("Q", 2, 2, a, "quadric")]
    components += [_line(f"T{i}", b) for i, b in enumerate(bs, start=1)]
    points = [SingularPointRec(f"t{i}", Tacnode(), (("Q", 1), (f"T{i}", 1))) for i in range(1, len(bs) + 1)]
    for i in range(1, len(bs) + 1):
        for j in range(i + 1, len(bs) + 1):
            points.append(SingularPointRec(f"n{i}_{j}", Node(), ((f"T{i}", 1), (f"T{j}", 1))))
    label = f"A({render_weight(a)};{_weights_label(bs)})"
    return OrbifoldConfig(components, points, label)


def cuspidal_genus(d, kappa, nu):
    """g = (d−1)(d−2)/2 − κ − ν."""
    return (d - 1) * (d - 2) // 2 - kappa - nu


def build_cuspidal(d, kappa, nu, b):
    """
    Curva irreducible de grado d con κ cúspides simples y ν nodos, peso b.

    Raises:
        NegativeGenus: Si (d−1)(d−2)/2 − κ − ν < 0
    """
    if d < 1 or kappa < 0 or nu < 0:
        raise NegativeGenus(f"parámetros inválidos d={d} κ={kappa} ν={nu}")
    genus = cuspidal_genus(d, kappa, nu)
    if genus < 0:
        raise NegativeGenus(f"d={d} κ={kappa} ν={nu}: género {genus}")
    euler = -d * d + 3 * d + 2 * kappa + nu
    curve = CurveComponent("C", d, euler, b, kind_for_degree(d))
    points = [SingularPointRec(f"k{i}", SimpleCusp(), (("C", 1),)) for i in range(1, kappa + 1)]
    points += [SingularPointRec(f"v{i}", Node(), (("C", 2),)) for i in range(1, nu + 1)]
    return OrbifoldConfig([curve], points, f"cuspidal(d={d},κ={kappa},ν={nu},b={render_weight(b)})")


def build_qm(m, weight=2):
    """
    Curva Q_m: grado 2m, 3m singularidades x²=y^m, conjunto de Euler 3m − m².

    Raises:
        EvenM: Si m es par
    """
    if m < 1 or m % 2 == 0:
        raise EvenM(f"m={m} debe ser impar y positivo")
    curve = CurveComponent("Qm", 2 * m, 3 * m - m * m, weight, kind_for_degree(2 * m))
    points = []
    if m > 1:
        points = [SingularPointRec(f"s{i}", UnibranchPower(m), (("Qm", 1),)) for i in range(1, 3 * m + 1)]
    return OrbifoldConfig([curve], points, f"Q_{m}(b={render_weight(weight)})")


# ============================================================================
# PRESETS
# ============================================================================
def complete_quadrilateral(weights):
    """Seis rectas por cuatro puntos: 4 puntos triples y 3 nodos diagonales."""
    lines = [_line(f"L{i}", w) for i, w in enumerate(weights, start=1)]
    triples = (("L1", "L2", "L3"), ("L1", "L4", "L5"), ("L2", "L4", "L6"), ("L3", "L5", "L6"))
    nodes = (("L1", "L6"), ("L2", "L5"), ("L3", "L4"))
    points = [SingularPointRec(f"P{i}", TransversalTriple(), tuple((c, 1) for c in ids)) for i, ids in enumerate(triples, 1)]
    points += [SingularPointRec(f"D{i}", Node(), tuple((c, 1) for c in ids)) for i, ids in enumerate(nodes, 1)]
    return OrbifoldConfig(lines, points, f"complete_quadrilateral({_weights_label(weights)})")


def ceva3(weights):
    """x = ω^i y, y = ω^j z, z = ω^k x: 9 rectas, 12 puntos triples, sin nodos."""
    ids = [f"{family}{i}" for family in "ABC" for i in range(3)]
    lines = [_line(cid, w) for cid, w in zip(ids, weights)]
    points = []
    for family in "ABC":
        members = tuple((f"{family}{i}", 1) for i in range(3))
        points.append(SingularPointRec(f"V{family}", TransversalTriple(), members))
    for i in range(3):
        for j in range(3):
            k = (-(i + j)) % 3
            incid = ((f"A{i}", 1), (f"B{j}", 1), (f"C{k}", 1))
            points.append(SingularPointRec(f"P{i}{j}", TransversalTriple(), incid))
    return OrbifoldConfig(lines, points, f"ceva3({_weights_label(weights)})")


def six_general_lines(weights):
    """Seis rectas en posición general: 15 nodos."""
    lines = [_line(f"T{i}", w) for i, w in enumerate(weights, start=1)]
    points = []
    for i in range(1, 7):
        for j in range(i + 1, 7):
            points.append(SingularPointRec(f"n{i}_{j}", Node(), ((f"T{i}", 1), (f"T{j}", 1))))
    return OrbifoldConfig(lines, points, f"six_general_lines({_weights_label(weights)})")


def c2_family(weights):
    """
    Rectas L_1..L_4 (pesos a_1..a_4) y X, Y, Z (pesos e, f, g).

    6 puntos triples L1L2Y, L2L3X, L3L4Y, L4L1X, L1L3Z, L2L4Z y 3 nodos XY, YZ, XZ.
    """
    ids = ("L1", "L2", "L3", "L4", "X", "Y", "Z")
    lines = [_line(cid, w) for cid, w in zip(ids, weights)]
    triples = (
        ("L1", "L2", "Y"), ("L2", "L3", "X"), ("L3", "L4", "Y"),
        ("L4", "L1", "X"), ("L1", "L3", "Z"), ("L2", "L4", "Z"),
    )
    points = [SingularPointRec("".join(t), TransversalTriple(), tuple((c, 1) for c in t)) for t in triples]
    for pair in (("X", "Y"), ("Y", "Z"), ("X", "Z")):
        points.append(SingularPointRec("".join(pair), Node(), tuple((c, 1) for c in pair)))
    a, e = weights[:4], weights[4:]
    return OrbifoldConfig(lines, points, f"C2({_weights_label(a)};{_weights_label(e)})")


def coordinate_triangle(weights):
    """Triángulo de coordenadas xyz = 0: tres rectas y tres nodos."""
    ids = ("X", "Y", "Z")
    lines = [_line(cid, w) for cid, w in zip(ids, weights)]
    points = [
        SingularPointRec("XY", Node(), (("X", 1), ("Y", 1))),
        SingularPointRec("YZ", Node(), (("Y", 1), ("Z", 1))),
        SingularPointRec("XZ", Node(), (("X", 1), ("Z", 1))),
    ]
    return OrbifoldConfig(lines, points, f"triangle({_weights_label(weights)})")


PRESETS = {
    "complete_quadrilateral": (6, complete_quadrilateral),
    "ceva3": (9, ceva3),
    "six_general_lines": (6, six_general_lines),
    "C2_family": (7, c2_family),
    "coordinate_triangle": (3, coordinate_triangle),
}

ALIASES = {"ceva(3)": "ceva3", "c2_family": "C2_family", "C2": "C2_family"}


def build_preset(name, weights):
    """
    Construye un preset con los pesos dados.

    Args:
        name (str): complete_quadrilateral | ceva3 | six_general_lines | C2_family |
            coordinate_triangle
        weights (list): Un peso por componente, en el orden del preset

    Raises:
        PresetError: Nombre desconocido o número de pesos incorrecto
    """
    key = ALIASES.get(name, name)
    if key not in PRESETS:
        raise PresetError(f"preset desconocido: {name}")
    arity, builder = PRESETS[key]
    weights = list(weights)
    if len(weights) != arity:
        raise PresetError(f"{key} requiere {arity} pesos, recibidos {len(weights)}")
    return builder(weights)
