import pytest

from errors import ConfigSyntaxError, DuplicateId, EvenM, NegativeGenus, PresetError, UnknownComponent
from numerics import INF

from configuration import (
    EMPTY,
    OrdinaryLinePoint,
    TangentPencil,
    UnibranchPower,
    boundary_points,
    build_apollonius,
    build_cuspidal,
    build_preset,
    build_qm,
    canonical_form,
    iso_check,
    normalize,
    pair_intersections,
    parse_config,
    parse_local_type,
    render_config,
    validate,
)
from configuration.model import SingularPointRec


# ----------------------------------------------------------------------------
# Lectura de documentos
# ----------------------------------------------------------------------------
def test_parse_document(general_lines_text):
    config = parse_config(general_lines_text)
    assert config.label == "cuatro rectas generales"
    assert [c.id for c in config.components] == ["A", "B", "C", "D"]
    assert all(c.kind == "line" for c in config.components)
    assert len(config.points) == 6
    assert config.point("bd").incidences == (("B", 1), ("D", 1))


def test_comments_and_blank_lines_are_ignored():
    text = "# cabecera\n\ncomponent L degree=1 euler=2 weight=INF  # recta\n"
    config = parse_config(text)
    assert config.component("L").weight is INF


def test_syntax_error_reports_line_and_column():
    with pytest.raises(ConfigSyntaxError) as info:
        parse_config("component Q degree=two euler=2 weight=4")
    assert (info.value.line, info.value.column) == (1, 20)


def test_zero_denominator_weight_is_a_syntax_error():
    with pytest.raises(ConfigSyntaxError) as info:
        parse_config("component L degree=1 euler=2 weight=1/0")
    assert (info.value.line, info.value.column) == (1, 37)


def test_tabs_separate_tokens_and_keep_columns():
    config = parse_config("component\tL degree=1\teuler=2 weight=3\n")
    assert config.component("L").weight == 3
    with pytest.raises(ConfigSyntaxError) as info:
        parse_config("component\tQ\tdegree=two euler=2 weight=4")
    assert (info.value.line, info.value.column) == (1, 20)


@pytest.mark.parametrize(
    "text",
    [
        "curve X degree=1",
        "component L degree=1 euler=2",
        "component L degree=1 euler=1 weight=2",
        "component L degree=1 euler=2 weight=0",
        "component L degree=1 euler=2 weight=2 colour=red",
        "component A degree=1 euler=2 weight=2\ncomponent B degree=1 euler=2 weight=2\n"
        "point p type=triple on=A,B",
        "component A degree=1 euler=2 weight=2\npoint p type=blob on=A",
    ],
)
def test_malformed_documents(text):
    with pytest.raises(ConfigSyntaxError):
        parse_config(text)


def test_unknown_component_and_duplicate_ids():
    with pytest.raises(UnknownComponent):
        parse_config("component A degree=1 euler=2 weight=2\npoint p type=node on=A,B")
    with pytest.raises(DuplicateId):
        parse_config("component A degree=1 euler=2 weight=2\ncomponent A degree=1 euler=2 weight=3")


def test_written_document_parses_back_to_an_isomorphic_configuration():
    config = build_apollonius(3, [2, 3, 4])
    text = render_config(config, ["degree=4 ok=True"])
    assert "# check degree=4 ok=True" in text
    again = parse_config(text)
    assert again.label == config.label
    assert iso_check(again, config)


# ----------------------------------------------------------------------------
# Tipos locales
# ----------------------------------------------------------------------------
def test_local_type_codes():
    assert parse_local_type("tangent:3") == TangentPencil(2, 3)
    assert parse_local_type("pencil:2:2").code() == "tacnode"
    assert parse_local_type("pencil:3:2:t").branch_count == 4
    assert parse_local_type("power:3") == UnibranchPower(3)
    assert parse_local_type("power:3").code() == "cusp"
    assert parse_local_type("ordinary:4") == OrdinaryLinePoint(4)
    for bad in ("pencil:2:3:x", "power:4", "ordinary:1", "hexnode"):
        with pytest.raises(ValueError):
            parse_local_type(bad)


def test_transversal_branch_must_be_last_and_single():
    with pytest.raises(ValueError):
        SingularPointRec("p", TangentPencil(2, 3, True), (("A", 1), ("B", 2)))


def test_pair_intersections_of_a_pencil():
    point = SingularPointRec("p", TangentPencil(2, 3, True), (("A", 1), ("B", 1), ("C", 1)))
    assert pair_intersections(point) == {("A", "B"): 3, ("A", "C"): 1, ("B", "C"): 1}


# ----------------------------------------------------------------------------
# Normalización
# ----------------------------------------------------------------------------
def test_normalize_drops_weight_one_lines():
    config = normalize(build_preset("six_general_lines", [6, 6, 6, 2, 1, 1]))
    assert [c.id for c in config.components] == ["T1", "T2", "T3", "T4"]
    assert len(config.points) == 6
    assert normalize(config) == config


def test_normalize_retypes_triple_points():
    config = normalize(build_preset("complete_quadrilateral", [1, 2, 2, 2, 2, 2]))
    codes = sorted(p.local_type.code() for p in config.points)
    assert codes == ["node"] * 4 + ["triple"] * 2
    assert config.point("P1").incidences == (("L2", 1), ("L3", 1))


def test_normalize_drops_tacnode_of_a_removed_line():
    config = normalize(build_apollonius(2, [1, 3]))
    assert [c.id for c in config.components] == ["Q", "T2"]
    assert [p.id for p in config.points] == ["t2"]


def test_normalize_turns_pencil_with_one_tangent_branch_into_node():
    text = (
        "component A degree=1 euler=2 weight=1\n"
        "component B degree=2 euler=2 weight=3\n"
        "component C degree=1 euler=2 weight=2\n"
        "point p type=pencil:2:2:t on=A,B,C\n"
    )
    config = normalize(parse_config(text))
    assert config.point("p").local_type == OrdinaryLinePoint(2)
    assert config.point("p").incidences == (("B", 1), ("C", 1))


# ----------------------------------------------------------------------------
# Validación
# ----------------------------------------------------------------------------
@pytest.mark.parametrize(
    "config",
    [
        build_apollonius(4, [4, 4, 4]),
        build_apollonius(2, [3, 3, 3]),
        build_preset("complete_quadrilateral", [2] * 6),
        build_preset("ceva3", [3] * 9),
        build_preset("six_general_lines", [2] * 6),
        build_preset("C2_family", [4, 4, 4, 4, 2, 2, 2]),
        build_preset("coordinate_triangle", [2, 3, 4]),
        build_cuspidal(6, 9, 0, 2),
        build_qm(5),
    ],
)
def test_builders_with_admissible_weights_validate(config):
    assert validate(normalize(config)) == []


def test_inadmissible_tacnode_is_reported():
    violations = validate(build_apollonius(3, [7]))
    assert [(v.point_id, v.kind) for v in violations] == [("t1", "inadmissible")]


HIGHER_TACNODE_TEXT = (
    "component Q degree=2 euler=2 weight=2 kind=quadric\n"
    "component R degree=2 euler=2 weight=2 kind=quadric\n"
    "point p type=tangent:3 on=Q,R\n"
)


def test_higher_tangency_is_unsupported_for_invariants():
    config = parse_config(HIGHER_TACNODE_TEXT)
    violations = validate(config)
    assert [(v.point_id, v.kind) for v in violations] == [("p", "unsupported")]
    assert "no soportado para invariantes" in violations[0].message
    assert validate(config, tangency_orders=True) == []
    assert boundary_points(config) == []


def test_bezout_budget():
    text = (
        "component A degree=1 euler=2 weight=2\n"
        "component B degree=1 euler=2 weight=2\n"
        "point p type=node on=A,B\n"
        "point q type=node on=A,B\n"
    )
    violations = validate(parse_config(text))
    assert [(v.point_id, v.kind) for v in violations] == [("A·B", "bezout")]


def test_smooth_components_cannot_carry_two_branches():
    text = "component A degree=1 euler=2 weight=2\npoint p type=node on=A:2\n"
    kinds = {v.kind for v in validate(parse_config(text))}
    assert "structure" in kinds


def test_boundary_points_are_not_violations():
    config = build_apollonius(4, [4, 4, 4])
    assert boundary_points(config) == ["t1", "t2", "t3"]
    assert validate(config) == []
    assert boundary_points(build_preset("ceva3", [3] * 9)) == [p.id for p in build_preset("ceva3", [3] * 9).points]


# ----------------------------------------------------------------------------
# Isomorfismo
# ----------------------------------------------------------------------------
def test_iso_check_ignores_order_of_tangent_lines():
    assert iso_check(build_apollonius(2, [2, 3, 4]), build_apollonius(2, [4, 2, 3]))
    assert not iso_check(build_apollonius(2, [2, 3, 4]), build_apollonius(2, [2, 3, 5]))
    assert not iso_check(build_apollonius(2, [2, 3]), build_apollonius(2, [2, 3, 4]))


def test_iso_check_ignores_identifiers():
    config = build_apollonius(3, [3, 3])
    renamed = parse_config(render_config(config).replace("T", "L"))
    assert [c.id for c in renamed.components] == ["Q", "L1", "L2"]
    assert iso_check(config, renamed)
    assert canonical_form(config) == canonical_form(renamed)


def test_iso_check_sees_incidences():
    # mismos componentes y tipos, distinta incidencia
    a = parse_config(
        "component A degree=1 euler=2 weight=2\ncomponent B degree=1 euler=2 weight=3\n"
        "component C degree=1 euler=2 weight=3\npoint p type=node on=A,B\n"
    )
    b = parse_config(
        "component A degree=1 euler=2 weight=2\ncomponent B degree=1 euler=2 weight=3\n"
        "component C degree=1 euler=2 weight=3\npoint p type=node on=B,C\n"
    )
    assert not iso_check(a, b)
    assert iso_check(a, a)


# ----------------------------------------------------------------------------
# Constructores
# ----------------------------------------------------------------------------
def test_apollonius_shape():
    config = build_apollonius(5, [2, 3, 4, 6])
    assert config.label == "A(5;2,3,4,6)"
    assert len(config.components) == 5
    codes = [p.local_type.code() for p in config.points]
    assert codes.count("tacnode") == 4
    assert codes.count("node") == 6


def test_cuspidal_builder():
    config = build_cuspidal(6, 9, 0, 2)
    curve = config.component("C")
    assert (curve.degree, curve.euler_set, curve.kind) == (6, 0, "general")
    assert len(config.points) == 9
    assert all(p.local_type.code() == "cusp" for p in config.points)
    with pytest.raises(NegativeGenus):
        build_cuspidal(4, 4, 0, 2)


def test_qm_builder():
    config = build_qm(5)
    curve = config.component("Qm")
    assert (curve.degree, curve.euler_set, curve.weight) == (10, -10, 2)
    assert len(config.points) == 15
    assert build_qm(1).points == ()
    with pytest.raises(EvenM):
        build_qm(4)


def test_presets():
    ceva = build_preset("ceva(3)", [3] * 9)
    assert len(ceva.components) == 9
    assert len(ceva.points) == 12
    assert build_preset("C2", [4, 4, 4, 4, 2, 2, 2]).label == "C2(4,4,4,4;2,2,2)"
    assert len(build_preset("complete_quadrilateral", [2] * 6).points) == 7
    with pytest.raises(PresetError):
        build_preset("pentagon", [2] * 5)
    with pytest.raises(PresetError):
        build_preset("ceva3", [3] * 8)


def test_empty_configuration():
    assert EMPTY.components == ()
    assert EMPTY.locus_degree() == 0
    assert validate(EMPTY) == []
