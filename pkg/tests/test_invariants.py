import random

import pytest

from errors import InadmissibleWeights, NegativeGenus, UnsupportedShape
from numerics import INF, XRat

from configuration import EMPTY, build_apollonius, build_cuspidal, build_preset, build_qm, parse_config
from invariants import (
    apollonius_cherns,
    canonical_slope,
    chern_pair,
    classify,
    classify_values,
    cuspidal_cherns,
    euler_orbifold,
    splitting_identities,
    triangle_class,
)


def q(text):
    return XRat.parse(text)


def test_projective_plane():
    pair = chern_pair(EMPTY)
    assert (pair.c1sq, pair.euler) == (XRat(9), XRat(3))
    assert classify(EMPTY).name == "Spherical"


@pytest.mark.parametrize(
    "config, c1sq, euler, name",
    [
        (build_apollonius(4, [4, 4, 4]), "9/16", "3/16", "BallCandidate"),
        (build_apollonius(2, [4, 4, 4]), "1/16", "1/32", "PolydiskCandidate"),
        (build_apollonius(4, [4, 4]), "0", "1/16", "ZeroC1"),
        (build_preset("complete_quadrilateral", [2] * 6), "0", "0", "Flat"),
        (build_preset("ceva3", [3] * 9), "9", "3", "BallCandidate"),
        (build_preset("C2_family", [4, 4, 4, 4, 2, 2, 2]), "9/4", "3/4", "BallCandidate"),
        (build_preset("six_general_lines", [6, 6, 6, 2, 1, 1]), "0", "1/3", "ZeroC1"),
        (build_preset("six_general_lines", [4, 4, 4, 4, 1, 1]), "0", "3/8", "ZeroC1"),
        (build_preset("six_general_lines", [2] * 6), "0", "3/4", "ZeroC1"),
        (build_cuspidal(6, 9, 0, 2), "0", "0", "Flat"),
    ],
)
def test_chern_numbers_and_class(config, c1sq, euler, name):
    pair = chern_pair(config)
    assert pair.c1sq == q(c1sq)
    assert pair.euler == q(euler)
    assert classify(config).name == name


def test_chern_pair_helpers():
    pair = chern_pair(build_apollonius(4, [4, 4, 4]))
    assert pair.diff3 == 0
    assert pair.diff2 == XRat(-3, 16)
    assert pair.scaled(4).euler == XRat(3, 4)
    assert pair.to_json() == {"c1sq": {"num": 9, "den": 16}, "euler": {"num": 3, "den": 16}}
    assert canonical_slope(build_apollonius(4, [4, 4, 4])) == XRat(3, 4)


def test_weight_one_components_are_invisible(general_lines_text):
    with_ones = build_preset("six_general_lines", [4, 4, 4, 4, 1, 1])
    assert chern_pair(with_ones) == chern_pair(parse_config(general_lines_text))


def test_classification_precedence():
    assert classify_values(XRat(0), XRat(0)).name == "Flat"
    assert classify_values(XRat(3), XRat(3)).name == "BallCandidate"
    assert classify_values(XRat(3), XRat(-3)).name == "Spherical"
    assert classify_values(XRat(8), XRat(4)).name == "PolydiskCandidate"
    assert classify_values(XRat(1), XRat(0)).name == "ZeroC1"
    assert classify_values(XRat(1), XRat(5)).name == "Other"
    assert classify_values(XRat(-1), XRat(0)).name == "Other"


@pytest.mark.parametrize(
    "bs, name",
    [
        ([2, 3, 5], "Spherical"),
        ([2, 2, 7], "Spherical"),
        ([3, 3, 3], "Euclidean"),
        ([2, 4, 4], "Euclidean"),
        ([2, 3, 7], "Hyperbolic"),
        ([3, 3], "Spherical"),
        ([INF, INF], "Euclidean"),
        ([2, 2, 2, 2], "Euclidean"),
        ([2, 2, 2, 3], "Hyperbolic"),
    ],
)
def test_triangle_class(bs, name):
    assert triangle_class(bs).name == name


def test_triangle_class_rejects_unsupported_shapes():
    with pytest.raises(UnsupportedShape):
        triangle_class([3, 4])
    with pytest.raises(UnsupportedShape):
        triangle_class([5])


# ----------------------------------------------------------------------------
# Fórmulas cerradas
# ----------------------------------------------------------------------------
def test_closed_form_matches_engine_on_random_weights():
    rng = random.Random(20240917)
    domain = list(range(2, 13)) + [INF]
    tested = 0
    while tested < 150:
        a = rng.choice(domain)
        bs = [rng.choice(domain) for _ in range(rng.randint(0, 6))]
        try:
            closed = apollonius_cherns(a, bs)
        except InadmissibleWeights:
            continue
        tested += 1
        assert chern_pair(build_apollonius(a, bs)) == closed
        first, second = splitting_identities(a, bs)
        assert first == XRat(2) * closed.diff2
        assert second == XRat(8) * closed.diff3


def test_closed_form_is_symmetric_in_tangent_weights():
    assert apollonius_cherns(3, [2, 3, 4]) == apollonius_cherns(3, [4, 3, 2])
    pair = apollonius_cherns(INF, [2, 2])
    assert (pair.c1sq, pair.euler) == (XRat(0), XRat(1, 4))


def test_closed_form_rejects_inadmissible_tacnodes():
    with pytest.raises(InadmissibleWeights):
        apollonius_cherns(3, [7])


@pytest.mark.parametrize(
    "d, kappa, nu, b, euler, c1sq",
    [
        (6, 9, 0, 2, "0", "0"),
        (8, 17, 0, 2, "1/3", "1"),
        (15, 40, 51, 6, "361/12", "361/4"),
    ],
)
def test_cuspidal_closed_form(d, kappa, nu, b, euler, c1sq):
    pair = cuspidal_cherns(d, kappa, nu, b)
    assert (pair.euler, pair.c1sq) == (q(euler), q(c1sq))
    assert pair.diff3 == 0
    assert chern_pair(build_cuspidal(d, kappa, nu, b)) == pair


def test_cuspidal_closed_form_accepts_infinite_weight():
    pair = cuspidal_cherns(6, 9, 0, INF)
    assert pair.c1sq == XRat(9)
    with pytest.raises(NegativeGenus):
        cuspidal_cherns(4, 4, 0, 2)


@pytest.mark.parametrize("m", [1, 3, 5, 7, 9])
def test_qm_euler_identity(m):
    genus = (m - 1) * (m - 2) // 2
    assert XRat(2 * m * m) * euler_orbifold(build_qm(m)) == XRat((2 - 2 * genus) ** 2)
