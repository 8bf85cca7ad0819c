"""
Batería de comprobaciones contra los datos publicados.

Cada criterio se ejecuta aislado: un fallo (o un fichero de datos corrupto)
sólo afecta a su propio resultado.
"""

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from errors import InadmissibleWeights, OrbifoldError
from numerics import INF, XRat

from configuration import build_apollonius, iso_check
from invariants import (
    apollonius_cherns,
    chern_pair,
    cuspidal_cherns,
    enumerate_cuspidal,
    search_parabolic,
    splitting_identities,
)
from coverings import (
    KummerCover,
    k3_checks,
    lift_config,
    weight_swap_lift,
    modular_cover_record,
    theorem1_iterate,
    theorem2_bookkeeping,
)
from groups import (
    abelianize,
    build_a2,
    build_apollonius_pi1,
    build_coordinate_triangle,
    build_modular,
    enumerate_cosets,
)

PRESERVED_CLASSES = ("Flat", "BallCandidate", "PolydiskCandidate")


@dataclass(frozen=True)
class CriterionResult:
    """Resultado de un criterio: nombre, éxito y detalle legible."""

    name: str
    ok: bool
    detail: str

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def load_golden(settings, name):
    """Lee un fichero JSON de la carpeta de datos."""
    with open(settings.get_data_file(name), encoding="utf-8") as handle:
        return json.load(handle)


# ============================================================================
# COMPROBACIONES REUTILIZADAS POR `tables --check-paper`
# ============================================================================
def check_cuspidal_rows(rows, golden):
    """
    Las filas publicadas deben estar contenidas en las encontradas, con
    3e = c1² exacto, el género correcto y los valores puntuales indicados.

    Returns:
        tuple[bool, str]
    """
    found = {row.as_tuple() for row in rows}
    published = [tuple(row) for row in golden["rows"]]
    missing = [row for row in published if row not in found]
    problems = []
    for number, (d, kappa, nu, b, g) in enumerate(published, start=1):
        pair = cuspidal_cherns(d, kappa, nu, b)
        if pair.diff3 != 0:
            problems.append(f"fila {number}: 3e − c1² = {pair.diff3}")
        if (d - 1) * (d - 2) // 2 - kappa - nu != g:
            problems.append(f"fila {number}: género {g} incorrecto")
        spot = golden.get("spot_values", {}).get(str(number))
        if spot and (pair.euler != XRat.parse(spot["euler"]) or pair.c1sq != XRat.parse(spot["c1sq"])):
            problems.append(f"fila {number}: (e, c1²) = ({pair.euler}, {pair.c1sq})")
    if missing:
        problems.append(f"faltan {len(missing)} filas: {missing[:3]}")
    detail = f"{len(published) - len(missing)}/{len(published)} filas"
    if problems:
        detail += "; " + "; ".join(problems)
    return not problems, detail


def check_parabolic_sets(result, golden):
    """
    Cada cláusula debe coincidir exactamente con lo publicado más los extras
    documentados.

    Returns:
        tuple[bool, str]
    """
    problems = []
    for clause, published in golden["published"].items():
        expected = set(published) | set(golden.get("extras", {}).get(clause, []))
        found = set(result.rendered(clause))
        if found != expected:
            extra = sorted(found - expected)
            lost = sorted(expected - found)
            problems.append(f"({clause}) sobran {extra} faltan {lost}")
    if len(result.families) != len(golden.get("families", [])):
        problems.append(f"familias simbólicas: {result.families}")
    if problems:
        return False, "; ".join(problems)
    return True, "cláusulas (i)-(iv) coinciden"


# ============================================================================
# CLASE: VerificationSuite
# Propósito: Ejecutar todos los criterios de aceptación
# Responsabilidades:
#   - Cargar los datos de referencia versionados
#   - Ejecutar cada criterio de forma aislada
#   - Devolver un resultado por criterio
# ============================================================================
class VerificationSuite:
    def __init__(self, settings, feedback=None):
        """
        Args:
            settings (OrbifoldSettings): Límites y semilla
            feedback (ConsoleFeedback): Mensajes de progreso (opcional)
        """
        self.settings = settings
        self.feedback = feedback

    def criteria(self):
        return [
            ("cuspidal_table", self.check_cuspidal_table),
            ("parabolic_sets", self.check_parabolic_sets),
            ("closed_form_equivalence", self.check_closed_forms),
            ("modular_cover", self.check_modular_cover),
            ("covering_multiplicativity", self.check_coverings),
            ("weight_swap_isomorphism", self.check_weight_swap),
            ("qm_euler_identity", self.check_qm_identity),
            ("group_orders", self.check_group_orders),
            ("k3_orbifolds", self.check_k3),
        ]

    def run(self):
        """
        Returns:
            list[CriterionResult]: En el orden de criteria()
        """
        results = []
        for name, check in self.criteria():
            if self.feedback:
                self.feedback.progress(f"verificando {name}")
            try:
                ok, detail = check()
            except (OrbifoldError, OSError, ValueError, KeyError) as exc:
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            results.append(CriterionResult(name, ok, detail))
        return results

    # ------------------------------------------------------------------
    def check_cuspidal_table(self):
        golden = load_golden(self.settings, "cuspidal_table.json")
        rows = enumerate_cuspidal(golden["d_max"], tuple(golden["weights"]))
        return check_cuspidal_rows(rows, golden)

    def check_parabolic_sets(self):
        golden = load_golden(self.settings, "parabolic_sets.json")
        result = search_parabolic(golden["cap"], self.settings.parabolic_max_n)
        return check_parabolic_sets(result, golden)

    def check_closed_forms(self):
        rng = random.Random(self.settings.random_seed)
        domain = list(range(2, 13)) + [INF]
        tested = 0
        attempts = 0
        while tested < self.settings.random_cases and attempts < 50 * self.settings.random_cases:
            attempts += 1
            a = rng.choice(domain)
            bs = [rng.choice(domain) for _ in range(rng.randint(0, 6))]
            try:
                closed = apollonius_cherns(a, bs)
            except InadmissibleWeights:
                continue
            tested += 1
            engine = chern_pair(build_apollonius(a, bs))
            if engine != closed:
                return False, f"A({a};{bs}): fórmula {closed} ≠ motor {engine}"
            first, second = splitting_identities(a, bs)
            if first != XRat(2) * closed.diff2 or second != XRat(8) * closed.diff3:
                return False, f"A({a};{bs}): fórmulas de desdoblamiento"
        if tested < self.settings.random_cases:
            return False, f"sólo {tested} vectores admisibles"
        return True, f"{tested} vectores aleatorios (semilla {self.settings.random_seed})"

    def check_modular_cover(self):
        for a in range(2, 7):
            record = modular_cover_record(a)
            if not record.consistent:
                return False, f"a={a}: grado·invariantes ≠ invariantes de M_a"
        k3 = modular_cover_record(4)
        if (k3.euler_cover, k3.c1sq_cover) != (24, 0):
            return False, f"a=4: (e, c1²) = ({k3.euler_cover}, {k3.c1sq_cover})"
        return True, "a ∈ {2..6}; a=4 da e=24, c1²=0"

    def _lift_cases(self):
        branch = ("T1", "T2", "T3")
        cases = []
        for b in (2, 3):
            cases.append((f"A(2;{2 * b},{2 * b},{2 * b})", build_apollonius(2, [2 * b] * 3), 2))
        cases.append(("A(4;4,4,4)", build_apollonius(4, [4, 4, 4]), 2))
        for m in (3, 5, 7):
            cases.append((f"A(2;{m},{m},{m})", build_apollonius(2, [m] * 3), m))
        return [(label, lift_config(config, KummerCover(k, branch))) for label, config, k in cases]

    def check_coverings(self):
        reports = self._lift_cases()
        steps = theorem1_iterate(self.settings.theorem1_steps)
        reports += [(f"O{r}→O{r + 1}", report) for r, report in enumerate(steps, start=1)]
        for label, report in reports:
            if not report.multiplicative:
                return False, f"{label}: e o c1² no escalan por {report.degree}"
            base = report.base_class.name
            if base in PRESERVED_CLASSES and report.lifted_class.name != base:
                return False, f"{label}: clase {base} → {report.lifted_class.name}"
        for r, report in enumerate(steps, start=1):
            if report.lifted.locus_degree() < 2 ** r:
                return False, f"paso {r}: grado del lugar {report.lifted.locus_degree()} < {2 ** r}"
        return True, f"{len(reports)} levantamientos multiplicativos"

    def check_weight_swap(self):
        for b in (2, 3, 4):
            lifted = weight_swap_lift(b).lifted
            if not iso_check(lifted, build_apollonius(2, [b] * 4)):
                return False, f"b={b}: el levantamiento no es A(2;{b},{b},{b},{b})"
        return True, "b ∈ {2, 3, 4}"

    def check_qm_identity(self):
        for m in (1, 3, 5, 7, 9):
            record = theorem2_bookkeeping(m)
            if not (record.euler_identity and record.degrees_consistent):
                return False, f"m={m}: 2m²·e = {record.euler_orbifold * record.final_degree}"
        return True, "m ∈ {1, 3, 5, 7, 9}"

    def check_group_orders(self):
        golden = load_golden(self.settings, "group_orders.json")
        max_cosets = self.settings.max_cosets
        cases = []
        for b, expected in golden["a2"].items():
            b = int(b)
            cases.append((build_a2(2, b), expected, 2 * b * b))
        for key, expected in golden["spherical"].items():
            triple = [int(x) for x in key.split(",")]
            closed = Fraction(8) / (sum(Fraction(1, x) for x in triple) - 1) ** 2
            cases.append((build_modular(2, *triple), expected, closed))
        for a, expected in golden["modular"].items():
            a = int(a)
            cases.append((build_modular(a, 2, 2, 2), expected, 4 * a ** 3))
        for presentation, expected, closed in cases:
            if expected != closed:
                return False, f"{presentation.label}: dato {expected} ≠ fórmula {closed}"
            found = enumerate_cosets(presentation, max_cosets, self.settings.coset_strategy).order
            if found is None:
                return False, f"{presentation.label}: desbordamiento con {max_cosets} clases"
            if found != expected:
                return False, f"{presentation.label}: orden {found} ≠ {expected}"
        for m in range(2, golden["triangle_max_m"] + 1):
            invariants = abelianize(build_coordinate_triangle(m))
            if invariants.free_rank != 0 or invariants.torsion != (m, m):
                return False, f"triángulo m={m}: {invariants.render()}"
        for n in range(1, golden["pi1_max_n"] + 1):
            invariants = abelianize(build_apollonius_pi1(n))
            if invariants.free_rank != n or invariants.torsion:
                return False, f"π₁(A_{n}): {invariants.render()}"
        return True, f"{len(cases)} órdenes y abelianizaciones"

    def check_k3(self):
        golden = load_golden(self.settings, "k3.json")["cases"]
        for check in k3_checks():
            expected = golden[check.name]
            if (
                not check.ok
                or check.cover_degree != expected["degree"]
                or check.euler != XRat.parse(expected["euler"])
                or check.c1sq != XRat.parse(expected["c1sq"])
            ):
                return False, f"{check.name}: e={check.euler} c1²={check.c1sq} grado={check.cover_degree}"
            if check.derivation() != expected["derivation"]:
                return False, f"{check.name}: desglose {check.derivation()} ≠ {expected['derivation']}"
        return True, "E1, E2, E3"
