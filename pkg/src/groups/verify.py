"""
Comprobación de los órdenes de grupo frente a sus fórmulas cerradas.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .abelian import abelianize
from .builders import build_a2, build_apollonius_pi1, build_coordinate_triangle, build_modular
from .enumeration import enumerate_cosets

PASS = "pass"
FAIL = "fail"
OVERFLOW = "overflow"


@dataclass(frozen=True)
class GroupCheck:
    """Un caso: valor esperado, valor obtenido (None si desbordó) y estado."""

    family: str
    label: str
    expected: object
    found: object
    status: str

    def to_json(self):
        return {
            "family": self.family,
            "label": self.label,
            "expected": self.expected,
            "found": self.found,
            "status": self.status,
        }


@dataclass
class GroupReport:
    checks: list = field(default_factory=list)

    def add(self, family, label, expected, found):
        if found is None:
            status = OVERFLOW
        else:
            status = PASS if found == expected else FAIL
        self.checks.append(GroupCheck(family, label, expected, found, status))

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def overflows(self):
        return [c for c in self.checks if c.status == OVERFLOW]

    @property
    def ok(self):
        """Sin fallos; un desbordamiento no cuenta como fallo."""
        return not self.failures

    def counts(self):
        return {status: sum(1 for c in self.checks if c.status == status) for status in (PASS, FAIL, OVERFLOW)}


def spherical_triples(max_weight):
    """Ternas no decrecientes 2 ≤ b₁ ≤ b₂ ≤ b₃ ≤ max_weight con Σ1/b > 1."""
    return [
        triple
        for triple in combinations_with_replacement(range(2, max_weight + 1), 3)
        if sum(Fraction(1, b) for b in triple) > 1
    ]


def modular_order(triple):
    """8[Σ1/b − 1]⁻² para una terna esférica."""
    excess = sum(Fraction(1, b) for b in triple) - 1
    value = 8 / (excess * excess)
    if value.denominator != 1:
        raise ValueError(f"orden no entero para {triple}: {value}")
    return value.numerator


def verify_orders(max_weight, max_cosets, strategy="felsch"):
    """
    Enumera y compara:
        |build_a2(2, b)| = 2b²                         (2 ≤ b ≤ max_weight)
        |build_modular(2, b₁, b₂, b₃)| = 8[Σ1/b − 1]⁻²   (ternas esféricas)
        |build_modular(a, 2, 2, 2)| = 4a³              (2 ≤ a ≤ max_weight)

    Returns:
        GroupReport: Un caso por presentación; los desbordamientos quedan como estado
    """
    if max_weight < 2 or max_cosets < 1:
        raise ValueError("se necesita max_weight ≥ 2 y max_cosets ≥ 1")
    report = GroupReport()
    for b in range(2, max_weight + 1):
        p = build_a2(2, b)
        report.add("a2", p.label, 2 * b * b, enumerate_cosets(p, max_cosets, strategy).order)
    for triple in spherical_triples(max_weight):
        p = build_modular(2, *triple)
        report.add("spherical", p.label, modular_order(triple), enumerate_cosets(p, max_cosets, strategy).order)
    for a in range(2, max_weight + 1):
        p = build_modular(a, 2, 2, 2)
        report.add("modular", p.label, 4 * a ** 3, enumerate_cosets(p, max_cosets, strategy).order)
    return report


def verify_abelianizations(max_m, max_n):
    """
    (Z/m)² para el triángulo de coordenadas (m ≤ max_m) y rango libre n,
    sin torsión, para π₁(A_n) (n ≤ max_n).
    """
    report = GroupReport()
    for m in range(2, max_m + 1):
        p = build_coordinate_triangle(m)
        report.add("triangle", p.label, f"Z/{m} + Z/{m}", abelianize(p).render())
    for n in range(1, max_n + 1):
        p = build_apollonius_pi1(n)
        found = abelianize(p)
        report.add("pi1", p.label, f"Z^{n}" if n > 1 else "Z", found.render())
    return report
