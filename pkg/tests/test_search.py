import pytest

from numerics import INF

from app.verification import check_cuspidal_rows, check_parabolic_sets, load_golden
from invariants import CLAUSES, enumerate_cuspidal, render_case, search_parabolic, weight_domain


@pytest.fixture(scope="module")
def parabolic():
    return search_parabolic(12, 6)


def test_weight_domain():
    assert weight_domain(4) == [2, 3, 4, INF]


def test_render_case():
    assert render_case(INF, (2, 2)) == "(INF;2,2)"
    assert render_case(3, ()) == "(3;)"


@pytest.mark.parametrize(
    "clause, expected",
    [
        ("i", {"(3;2,3,4)", "(6;2,3,3)"}),
        ("ii", {"(2;INF,INF)", "(2;2,2,INF)", "(2;2,3,6)", "(2;2,4,4)", "(2;3,3,3)", "(2;2,2,2,2)"}),
        ("iii", {"(4;4,4,4)", "(3;3,4,4)", "(3;2,6,6)", "(3;3,3,6)"}),
        ("iv", {"(4;4,4)", "(3;6,6)", "(6;3,3)", "(4;2,2,2)", "(3;2,2,3)", "(INF;2,2)"}),
    ],
)
def test_parabolic_clauses(parabolic, clause, expected):
    assert set(parabolic.rendered(clause)) == expected


def test_parabolic_families_are_symbolic(parabolic):
    assert len(parabolic.families) == 2
    assert parabolic.family_members > 0
    assert "a=2" in parabolic.note
    assert tuple(parabolic.clauses) == CLAUSES


def test_parabolic_sets_match_golden_file(parabolic, settings):
    ok, detail = check_parabolic_sets(parabolic, load_golden(settings, "parabolic_sets.json"))
    assert ok, detail


def test_larger_cap_finds_nothing_new(parabolic):
    wider = search_parabolic(30, 5)
    for clause in CLAUSES:
        narrow = {case for case in parabolic.rendered(clause) if case.count(",") < 5}
        assert set(wider.rendered(clause)) == narrow


# ----------------------------------------------------------------------------
# Tabla cuspidal
# ----------------------------------------------------------------------------
@pytest.fixture(scope="module")
def cuspidal_rows():
    return enumerate_cuspidal(17)


def test_cuspidal_table_contains_published_rows(cuspidal_rows, settings):
    golden = load_golden(settings, "cuspidal_table.json")
    ok, detail = check_cuspidal_rows(cuspidal_rows, golden)
    assert ok, detail
    found = {row.as_tuple() for row in cuspidal_rows}
    assert (6, 9, 0, 2, 1) in found
    assert (15, 40, 51, 6, 0) in found


def test_cuspidal_rows_are_sorted_and_have_nonnegative_genus(cuspidal_rows):
    keys = [(r.d, r.nu, r.b, r.kappa) for r in cuspidal_rows]
    assert keys == sorted(keys)
    assert all(r.g >= 0 for r in cuspidal_rows)


def test_cuspidal_shards_merge_to_the_full_table():
    full = enumerate_cuspidal(12)
    merged = enumerate_cuspidal(12, shard=(0, 2)) + enumerate_cuspidal(12, shard=(1, 2))
    merged.sort(key=lambda r: (r.d, r.nu, r.b, r.kappa))
    assert merged == full


def test_missing_rows_fail_the_check(settings):
    golden = load_golden(settings, "cuspidal_table.json")
    ok, detail = check_cuspidal_rows(enumerate_cuspidal(10), golden)
    assert not ok
    assert "faltan" in detail
