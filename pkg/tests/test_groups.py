import pytest

from errors import CosetOverflow, PresentationSyntaxError
from numerics import INF

from configuration import parse_local_type
from invariants import local_order
from groups import (
    STRATEGIES,
    AbelianInvariants,
    Presentation,
    abelianize,
    build_a2,
    build_apollonius_pi1,
    build_coordinate_triangle,
    build_local_triple,
    build_modular,
    commutator,
    concat,
    enumerate_cosets,
    free_reduce,
    invariant_factors,
    inverse,
    letter,
    parse_presentation,
    power,
    quotient_orders,
    render_word,
    spherical_triples,
    todd_coxeter,
    verify_abelianizations,
    verify_orders,
    word,
)
from groups.verify import modular_order

MAX_COSETS = 10 ** 5


def cyclic(n):
    return Presentation(("x",), (power(letter("x"), n),), f"Z/{n}")


# ----------------------------------------------------------------------------
# Palabras y presentaciones
# ----------------------------------------------------------------------------
def test_word_helpers():
    a, b = letter("a"), letter("b")
    assert free_reduce((("a", 1), ("a", -1), ("b", 1))) == (("b", 1),)
    assert inverse(concat(a, b)) == (("b", -1), ("a", -1))
    assert power(a, -2) == (("a", -1), ("a", -1))
    assert render_word(commutator(a, b)) == "a b a' b'"
    assert render_word(word("a", "b'")) == "a b'"
    assert render_word(()) == "1"


def test_presentation_rejects_unknown_symbols_and_duplicates():
    with pytest.raises(ValueError):
        Presentation(("a",), (letter("b"),))
    with pytest.raises(ValueError):
        Presentation(("a", "a"), ())


def test_presentation_drops_trivial_relators():
    p = Presentation(("a",), (concat(letter("a"), inverse(letter("a"))), power(letter("a"), 3)))
    assert p.relators == (power(letter("a"), 3),)


def test_parse_presentation():
    text = """
    # grupo diédrico de orden 8
    label: D4
    gens: a b
    rel: a^4
    rel: b^2
    rel: (a b)^2 = 1
    rel: [a^2, b]
    """
    p = parse_presentation(text)
    assert p.label == "D4"
    assert p.generators == ("a", "b")
    assert len(p.relators) == 4
    assert p.relators[2] == word("a", "b", "a", "b")
    assert todd_coxeter(p, MAX_COSETS) == 8


def test_equations_are_stored_as_relators():
    p = parse_presentation("gens: a b\nrel: a b = b a")
    assert p.relators == (word("a", "b", "a'", "b'"),)
    q = parse_presentation("gens: a\nrel: a'^-3")
    assert q.relators == (power(letter("a"), 3),)


@pytest.mark.parametrize(
    "text",
    [
        "rel: a",
        "gens: a\nrel: b",
        "gens: a\nrel: a^b",
        "gens: a\nrel: a % a",
        "gens: a\nrel: (a",
        "gens: a\nrel: a 2",
        "gens: a a",
        "gens: a\ngens: b",
        "gens: a\nrelator: a",
        "a b",
        "",
    ],
)
def test_presentation_syntax_errors(text):
    with pytest.raises(PresentationSyntaxError):
        parse_presentation(text)


def test_rendered_presentation_parses_back():
    p = build_modular(2, 2, 2, 2)
    again = parse_presentation(p.render())
    assert again.generators == p.generators
    assert again.relators == p.relators


# ----------------------------------------------------------------------------
# Enumeración de clases laterales
# ----------------------------------------------------------------------------
def test_small_orders():
    assert todd_coxeter(cyclic(5), MAX_COSETS) == 5
    assert todd_coxeter(parse_presentation("gens: x\nrel: x"), MAX_COSETS) == 1
    assert enumerate_cosets(Presentation((), ()), MAX_COSETS).order == 1


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_a2_orders(b):
    assert todd_coxeter(build_a2(2, b), MAX_COSETS) == 2 * b * b


@pytest.mark.parametrize(
    "triple, order",
    [((2, 2, 2), 32), ((2, 2, 3), 72), ((2, 2, 4), 128), ((2, 2, 5), 200), ((2, 3, 3), 288)],
)
def test_spherical_orders(triple, order):
    assert modular_order(triple) == order
    assert todd_coxeter(build_modular(2, *triple), MAX_COSETS) == order


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_both_strategies_agree(strategy):
    assert todd_coxeter(build_modular(2, 2, 2, 3), MAX_COSETS, strategy) == 72
    assert enumerate_cosets(build_a2(2, 3), MAX_COSETS, strategy).is_permutation_action()


def test_unknown_strategy():
    with pytest.raises(ValueError):
        enumerate_cosets(cyclic(3), MAX_COSETS, "random")


@pytest.mark.slow
@pytest.mark.parametrize("triple, order", [((2, 3, 4), 1152), ((2, 3, 5), 7200)])
def test_large_spherical_orders(triple, order):
    assert todd_coxeter(build_modular(2, *triple), 10 ** 6) == order


@pytest.mark.parametrize("a", [2, 3, 4])
def test_modular_orders(a):
    assert todd_coxeter(build_modular(a, 2, 2, 2), MAX_COSETS) == 4 * a ** 3


@pytest.mark.parametrize("weights", [(2, 2, 2), (2, 2, 3)])
def test_local_triple_group_has_the_local_order(weights):
    order = local_order(parse_local_type("triple"), list(weights))
    assert todd_coxeter(build_local_triple(*weights), MAX_COSETS) == order.numerator


def test_complete_table_is_a_permutation_action():
    table = enumerate_cosets(build_a2(2, 3), MAX_COSETS)
    assert table.complete
    assert table.live == 18
    assert table.is_permutation_action()


def test_overflow_is_a_status_not_infinity():
    table = enumerate_cosets(build_apollonius_pi1(1), 50)
    assert table.status == "overflow"
    assert table.order is None
    assert not table.is_permutation_action()
    with pytest.raises(CosetOverflow):
        todd_coxeter(build_apollonius_pi1(1), 50)
    with pytest.raises(ValueError):
        enumerate_cosets(cyclic(3), 0)


def test_order_ignores_relabelling_and_cyclic_rotation():
    p = build_a2(2, 3)
    renamed = p.relabel({"t": "u", "k": "v"})
    rotated = Presentation(p.generators, tuple(rel[1:] + rel[:1] for rel in p.relators))
    assert todd_coxeter(renamed, MAX_COSETS) == 18
    assert todd_coxeter(rotated, MAX_COSETS) == 18


def test_quotient_orders():
    base = cyclic(12)
    x = letter("x")
    assert quotient_orders(base, [[power(x, 4)], [power(x, 3)], []], MAX_COSETS) == [4, 3, 12]


def test_infinite_weight_drops_the_power_relator():
    assert len(build_a2(2, INF).relators) == len(build_a2(2, 3).relators) - 2
    assert len(build_modular(INF, 2, 2, 2).relators) == len(build_modular(2, 2, 2, 2).relators) - 1


# ----------------------------------------------------------------------------
# Abelianización
# ----------------------------------------------------------------------------
def test_invariant_factors():
    assert invariant_factors([2, 3]) == (6,)
    assert invariant_factors([4, 6]) == (2, 12)
    assert invariant_factors([2, 2]) == (2, 2)
    assert invariant_factors([1, 1]) == ()


@pytest.mark.parametrize("m", range(2, 8))
def test_coordinate_triangle_abelianization(m):
    invariants = abelianize(build_coordinate_triangle(m))
    assert invariants == AbelianInvariants(0, (m, m))
    assert invariants.render() == f"Z/{m} + Z/{m}"


@pytest.mark.parametrize("n", range(1, 6))
def test_apollonius_complement_has_free_abelianization(n):
    invariants = abelianize(build_apollonius_pi1(n))
    assert invariants.free_rank == n
    assert invariants.torsion == ()


def test_abelian_rendering():
    assert abelianize(cyclic(2)).torsion == (2,)
    assert abelianize(parse_presentation("gens: a b\nrel: a^2\nrel: b^3")).render() == "Z/6"
    assert abelianize(parse_presentation("gens: a b")).render() == "Z^2"
    assert abelianize(parse_presentation("gens: a\nrel: a")).render() == "0"
    assert AbelianInvariants(1, (5,)).render() == "Z + Z/5"
    assert AbelianInvariants(0, (2, 4)).order == 8
    assert AbelianInvariants(2, ()).order is None


def test_abelianization_agrees_with_order_for_abelian_groups():
    p = build_coordinate_triangle(3)
    assert abelianize(p).order == todd_coxeter(p, MAX_COSETS) == 9


# ----------------------------------------------------------------------------
# Verificación
# ----------------------------------------------------------------------------
def test_spherical_triples():
    assert spherical_triples(5) == [
        (2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 2, 5), (2, 3, 3), (2, 3, 4), (2, 3, 5),
    ]


def test_verify_orders():
    report = verify_orders(3, MAX_COSETS)
    assert report.ok
    assert report.counts() == {"pass": 7, "fail": 0, "overflow": 0}


def test_verify_orders_reports_overflow_without_failing():
    report = verify_orders(3, 20)
    assert report.ok
    assert report.overflows
    assert all(check.found is None for check in report.overflows)


def test_verify_abelianizations():
    report = verify_abelianizations(5, 4)
    assert report.ok
    assert len(report.checks) == 8
