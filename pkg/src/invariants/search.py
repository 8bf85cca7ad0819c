"""
Enumeradores exhaustivos: soluciones parabólicas de la familia de Apolonio y
tabla de curvas cuspidales con 3e = c1².
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from errors import InadmissibleWeights
from numerics import INF, ONE, XRat, is_inf_weight, render_weight, weight_key, weight_reciprocal

from configuration.builders import cuspidal_genus
from .closed_forms import apollonius_cherns, cuspidal_cherns

CLAUSES = ("i", "ii", "iii", "iv")

REDUCTION_NOTE = (
    "a≠2: la admisibilidad de los tacnodos, 1/a + 1/b ≥ 1/2, acota b ≤ 2a/(a−2) "
    "(b ≤ 2 si a = INF), así que esos vectores se enumeran todos; "
    "a=2: 2e = c1² siempre (familia simbólica) y las cláusulas (ii)-(iv) "
    "fuerzan Σ1/b = n−2, así que sólo se visitan esos vectores"
)


def weight_domain(cap):
    """{2..cap} ∪ {INF}, en orden creciente."""
    return list(range(2, cap + 1)) + [INF]


def render_case(a, bs):
    """'(a;b1,b2,...)' con los b ordenados."""
    return f"({render_weight(a)};{','.join(render_weight(b) for b in bs)})"


def _sorted_weights(bs):
    return tuple(sorted(bs, key=weight_key))


# ============================================================================
# CLASE: ParabolicResult
# Propósito: Conjuntos solución de las cuatro cláusulas parabólicas
# ============================================================================
@dataclass
class ParabolicResult:
    """
    Atributos:
        cap: Cota de pesos usada
        max_n: Número máximo de rectas tangentes
        clauses: Cláusula → lista ordenada de (a, bs)
        families: Familias simbólicas de la cláusula (i)
        family_members: Casos de las familias encontrados dentro de la cota
        note: Argumento de la cota
    """

    cap: int
    max_n: int
    clauses: dict = field(default_factory=lambda: {c: [] for c in CLAUSES})
    families: list = field(default_factory=list)
    family_members: int = 0
    note: str = REDUCTION_NOTE

    def rendered(self, clause):
        return [render_case(a, bs) for a, bs in self.clauses[clause]]


def _admissible_bound(a):
    """Mayor b admisible junto a una cuádrica de peso a ≠ 2."""
    if is_inf_weight(a):
        return 2
    return (2 * a) // (a - 2)


def _unit_vectors(n, target, domain):
    """Vectores no decrecientes de n pesos del dominio con Σ1/b = target."""
    def extend(prefix, start, remaining, slots):
        if slots == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        for index in range(start, len(domain)):
            b = domain[index]
            inv = weight_reciprocal(b)
            if inv * slots < remaining:
                return
            if inv > remaining:
                continue
            yield from extend(prefix + [b], index, remaining - inv, slots - 1)

    if target.sign() < 0:
        return
    yield from extend([], 0, target, n)


def search_parabolic(cap=60, max_n=6):
    """
    Enumeración exhaustiva de las soluciones parabólicas de A(a; b_1..b_n).

    Cláusulas:
        (i) 2e = c1²  (ii) e = c1² = 0  (iii) 3e = c1² > 0  (iv) c1² = 0 < e

    Las familias infinitas de (i) (a = 2 con cualquier b; n = 4 con b = 2 y
    cualquier a) se devuelven en forma simbólica.

    Args:
        cap (int): Cota de los pesos finitos (≥ 12)
        max_n (int): Número máximo de rectas tangentes

    Returns:
        ParabolicResult
    """
    result = ParabolicResult(cap, max_n)
    result.families = ["a=2, cualquier n y b", "n=4, b=(2,2,2,2), cualquier a"]
    domain = weight_domain(cap)
    for n in range(0, max_n + 1):
        for bs in _unit_vectors(n, XRat(n - 2), domain):
            _record(result, 2, bs)
        for a in domain:
            if not is_inf_weight(a) and a == 2:
                continue
            bound = _admissible_bound(a)
            small = [b for b in domain if not is_inf_weight(b) and b <= bound]
            for bs in combinations_with_replacement(small, n):
                _record(result, a, bs)
    for clause in CLAUSES:
        result.clauses[clause].sort(key=lambda case: (len(case[1]), weight_key(case[0]), [weight_key(b) for b in case[1]]))
    return result


def _record(result, a, bs):
    bs = _sorted_weights(bs)
    try:
        pair = apollonius_cherns(a, bs)
    except InadmissibleWeights:
        return
    a_is_two = not is_inf_weight(a) and a == 2
    family_four = len(bs) == 4 and all(not is_inf_weight(b) and b == 2 for b in bs)
    if pair.diff2 == 0:
        if a_is_two or family_four:
            result.family_members += 1
        else:
            result.clauses["i"].append((a, bs))
    if pair.euler == 0 and pair.c1sq == 0:
        result.clauses["ii"].append((a, bs))
    if pair.diff3 == 0 and pair.c1sq.sign() > 0:
        result.clauses["iii"].append((a, bs))
    if pair.c1sq == 0 and pair.euler.sign() > 0:
        result.clauses["iv"].append((a, bs))


# ============================================================================
# TABLA CUSPIDAL
# ============================================================================
@dataclass(frozen=True)
class CuspidalRow:
    """(d, κ, ν, b, g) con 3e − c1² = 0."""

    d: int
    kappa: int
    nu: int
    b: int
    g: int

    def as_tuple(self):
        return (self.d, self.kappa, self.nu, self.b, self.g)


def enumerate_cuspidal(d_max, b_set=(2, 3, 4, 5, 6), shard=(0, 1)):
    """
    Todas las curvas (d, κ, ν, b, g) con d ≤ d_max, g ≥ 0 y 3e − c1² = 0.

    3e − c1² es lineal en ν con coeficiente −3(1 − 1/b²), así que para cada
    (d, b, κ) hay a lo sumo un ν; se acepta si es entero y cabe en el género.

    Args:
        d_max (int): Grado máximo
        b_set (iterable): Pesos en {2..6}
        shard (tuple): (i, n) procesa sólo los grados d ≡ i (mod n)

    Returns:
        list[CuspidalRow]: Ordenadas por (d, ν, b, κ)
    """
    index, count = shard
    rows = []
    for d in range(1, d_max + 1):
        if d % count != index:
            continue
        top = cuspidal_genus(d, 0, 0)
        for b in sorted(b_set):
            slope = ONE - weight_reciprocal(b) ** 2
            for kappa in range(0, top + 1):
                free = cuspidal_cherns(d, kappa, 0, b).diff3
                nu = free / (XRat(3) * slope)
                if not nu.is_integer or nu.sign() < 0:
                    continue
                nu = nu.numerator
                genus = cuspidal_genus(d, kappa, nu)
                if genus >= 0:
                    rows.append(CuspidalRow(d, kappa, nu, b, genus))
    rows.sort(key=lambda r: (r.d, r.nu, r.b, r.kappa))
    return rows
