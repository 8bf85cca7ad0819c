import json

import pytest

from config.settings import OrbifoldSettings
from configuration import build_apollonius, build_preset, iso_check, parse_config, render_config
from numerics import INF, XRat
from ui.renderer import OutputRecord, TableRenderer, plain_value


def plain_summary(out):
    """Líneas `clave = valor` de la salida plana."""
    pairs = {}
    for line in out.splitlines():
        key, sep, value = line.partition(" = ")
        if sep:
            pairs[key.strip()] = value
    return pairs


# ----------------------------------------------------------------------------
# invariants
# ----------------------------------------------------------------------------
def test_invariants_json(run_cli, ball_doc):
    code, out, _ = run_cli("--format", "json", "invariants", ball_doc)
    assert code == 0
    payload = json.loads(out)
    summary = payload["summary"]
    assert payload["command"] == f"invariants {ball_doc}"
    assert summary["c1sq"] == {"num": 9, "den": 16}
    assert summary["e"] == {"num": 3, "den": 16}
    assert summary["3e-c1sq"] == {"num": 0, "den": 1}
    assert summary["class"] == "BallCandidate"
    assert summary["boundary"] == ["t1", "t2", "t3"]


def test_invariants_output_is_byte_identical_across_runs(run_cli, ball_doc):
    first = run_cli("--format", "json", "invariants", ball_doc)
    second = run_cli("--format", "json", "invariants", ball_doc)
    assert first == second


def test_invariants_plain_and_csv(run_cli, ball_doc):
    code, out, _ = run_cli("invariants", ball_doc)
    assert code == 0
    summary = plain_summary(out)
    assert summary["c1sq"] == "9/16"
    assert summary["class"] == "BallCandidate"
    assert summary["boundary"] == "t1,t2,t3"

    code, out, _ = run_cli("--format", "csv", "invariants", ball_doc)
    lines = out.splitlines()
    assert lines[0] == "key,value"
    assert "e,3/16" in lines


def test_verbose_reports_the_classification_note(run_cli, ball_doc):
    _, _, quiet = run_cli("invariants", ball_doc)
    _, _, loud = run_cli("--verbose", "invariants", ball_doc)
    assert quiet == ""
    assert loud.startswith("· BallCandidate")


def test_syntax_error_exit_code(run_cli, write_doc):
    path = write_doc("component Q degree=two euler=2 weight=4\n")
    code, out, err = run_cli("invariants", path)
    assert code == 2
    assert out == ""
    assert "línea 1, columna 20" in err


def test_zero_denominator_weight_exit_code(run_cli, write_doc):
    path = write_doc("component L degree=1 euler=2 weight=1/0\n")
    code, out, err = run_cli("invariants", path)
    assert code == 2
    assert out == ""
    assert "línea 1, columna 37" in err
    code, _, _ = run_cli("build", "apollonius", "2", "1/0")
    assert code == 2


def test_unknown_component_exit_code(run_cli, write_doc):
    path = write_doc("component A degree=1 euler=2 weight=2\npoint p type=node on=A,B\n")
    code, _, err = run_cli("invariants", path)
    assert code == 2
    assert err.startswith("✗")


def test_inadmissible_document_exit_code(run_cli, write_doc):
    path = write_doc(render_config(build_apollonius(3, [7])))
    code, out, err = run_cli("invariants", path)
    assert code == 3
    assert out == ""
    assert "t1" in err


def test_higher_tangency_needs_the_flag(run_cli, write_doc):
    path = write_doc(
        "component Q degree=2 euler=2 weight=2 kind=quadric\n"
        "component R degree=2 euler=2 weight=2 kind=quadric\n"
        "point p type=tangent:3 on=Q,R\n"
    )
    code, out, err = run_cli("invariants", path)
    assert code == 5
    assert out == ""
    assert "no soportado para invariantes" in err

    code, out, _ = run_cli("invariants", path, "--tangency-orders")
    assert code == 0
    assert plain_summary(out)["class"]


def test_missing_file_exit_code(run_cli, tmp_path):
    code, _, err = run_cli("invariants", str(tmp_path / "no-existe.txt"))
    assert code == 1
    assert err.startswith("✗")


# ----------------------------------------------------------------------------
# build
# ----------------------------------------------------------------------------
def test_build_writes_a_parsable_document(run_cli):
    code, out, _ = run_cli("build", "preset", "C2_family", "4", "4", "4", "4", "2", "2", "2")
    assert code == 0
    assert iso_check(parse_config(out), build_preset("C2_family", [4, 4, 4, 4, 2, 2, 2]))


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("build", "preset", "nope", "2"), 3),
        (("build", "preset", "ceva3", "2", "2"), 3),
        (("build", "qm", "4"), 3),
        (("build", "cuspidal", "4", "4", "0", "2"), 3),
        (("build", "apollonius", "0"), 2),
        (("build", "apollonius", "2", "1/2"), 2),
    ],
)
def test_build_errors(run_cli, argv, expected):
    code, _, _ = run_cli(*argv)
    assert code == expected


# ----------------------------------------------------------------------------
# tables
# ----------------------------------------------------------------------------
def test_cuspidal_table_csv(run_cli):
    code, out, _ = run_cli("--format", "csv", "tables", "cuspidal", "--dmax", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "d,kappa,nu,b,g"
    assert "6,9,0,2,1" in lines


def test_cuspidal_check_fails_on_a_short_table(run_cli):
    code, out, err = run_cli("tables", "cuspidal", "--dmax", "10", "--check-paper")
    assert code == 4
    assert plain_summary(out)["check_paper"] == "fail"
    assert "faltan" in err


def test_parabolic_check_passes(run_cli):
    code, out, _ = run_cli("tables", "parabolic", "--cap", "12", "--check-paper")
    assert code == 0
    assert plain_summary(out)["check_paper"] == "pass"


def test_bad_shard_is_a_usage_error(run_cli):
    code, _, _ = run_cli("tables", "cuspidal", "--shard", "3/2")
    assert code == 2


# ----------------------------------------------------------------------------
# lift
# ----------------------------------------------------------------------------
def test_lift_reports_multiplicative_invariants(run_cli, ball_doc):
    code, out, err = run_cli("--format", "json", "lift", ball_doc, "--k", "2", "--branch", "T1", "T2", "T3")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["degree"] == 4
    assert payload["summary"]["multiplicative"] is True
    assert payload["summary"]["euler_lifted"] == {"num": 3, "den": 4}
    lifted = parse_config(payload["document"])
    assert iso_check(lifted, build_preset("C2_family", [4, 4, 4, 4, 2, 2, 2]))
    assert err.startswith("✓")


def test_lift_errors(run_cli, ball_doc):
    code, _, _ = run_cli("lift", ball_doc, "--k", "3", "--branch", "T1", "T2", "T3")
    assert code == 3
    code, _, _ = run_cli("lift", ball_doc)
    assert code == 2


def test_lift_unsupported_local_type(run_cli, write_doc):
    path = write_doc(render_config(build_apollonius(2, [6, 6, 6])))
    code, _, err = run_cli("lift", path, "--k", "3", "--branch", "T1", "T2", "T3")
    assert code == 5
    assert "t1" in err


def test_lift_iterate(run_cli):
    code, out, _ = run_cli("--format", "csv", "lift", "--iterate", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "step,branch,locus_degree,euler,c1sq,multiplicative,class"
    assert len(lines) == 3
    assert lines[1].startswith('1,"L1,L2,X",')
    assert lines[1].endswith("true,BallCandidate")


# ----------------------------------------------------------------------------
# groups
# ----------------------------------------------------------------------------
def test_groups_order(run_cli):
    code, out, _ = run_cli("--format", "json", "groups", "order", "--a2", "2", "3")
    assert code == 0
    summary = json.loads(out)["summary"]
    assert summary["order"] == 18
    assert summary["status"] == "complete"


def test_groups_order_with_either_strategy(run_cli):
    for strategy in ("felsch", "hlt"):
        code, out, _ = run_cli("groups", "order", "--modular", "2", "2", "2", "3", "--strategy", strategy)
        assert code == 0
        assert plain_summary(out)["order"] == "72"
    code, _, _ = run_cli("groups", "order", "--modular", "2", "2", "2", "3", "--strategy", "random")
    assert code == 2


def test_groups_order_from_file(run_cli, write_doc):
    path = write_doc("gens: x\nrel: x^7\n", "z7.txt")
    code, out, _ = run_cli("groups", "order", "--file", path)
    assert code == 0
    assert plain_summary(out)["order"] == "7"


def test_groups_overflow_is_a_warning_unless_strict(run_cli):
    code, out, err = run_cli("groups", "order", "--pi1", "1", "--max-cosets", "50")
    assert code == 0
    assert plain_summary(out)["status"] == "overflow"
    assert plain_summary(out)["order"] == "-"
    assert err.startswith("⚠")

    code, _, err = run_cli("groups", "order", "--pi1", "1", "--max-cosets", "50", "--strict")
    assert code == 1
    assert err.startswith("✗")


def test_groups_abelianize(run_cli):
    code, out, _ = run_cli("--format", "json", "groups", "abelianize", "--coordinate-triangle", "5")
    assert code == 0
    summary = json.loads(out)["summary"]
    assert summary["abelianization"] == "Z/5 + Z/5"
    assert summary["torsion"] == [5, 5]


def test_presentation_syntax_error_exit_code(run_cli, write_doc):
    path = write_doc("gens: x\nrel: y\n", "bad.txt")
    code, _, _ = run_cli("groups", "order", "--file", path)
    assert code == 2


def test_groups_verify(run_cli):
    code, out, err = run_cli("--format", "json", "groups", "verify", "--max-weight", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"] == {"fail": 0, "overflow": 0, "pass": 7}
    assert payload["columns"] == ["family", "presentation", "expected", "found", "status"]
    assert err.startswith("✓")


@pytest.mark.slow
def test_verify_all_criteria(run_cli):
    code, out, _ = run_cli("verify", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["passed"] == payload["summary"]["total"] == 9
    assert all(row[1] == "pass" for row in payload["rows"])


# ----------------------------------------------------------------------------
# Ajustes y renderizado
# ----------------------------------------------------------------------------
def test_settings_update():
    settings = OrbifoldSettings().update(max_cosets=None, strict=True)
    assert settings.max_cosets == 10 ** 6
    assert settings.strict
    with pytest.raises(AttributeError):
        settings.update(colour="red")
    settings.output_format = "xml"
    with pytest.raises(ValueError):
        settings.get_output_format()


def test_golden_files_are_found(settings):
    assert settings.get_data_file("cuspidal_table.json").is_file()
    assert settings.get_data_file("parabolic_sets.json").is_file()


def test_plain_values():
    assert plain_value(XRat(1, 2)) == "1/2"
    assert plain_value([INF, 2]) == "INF,2"
    assert plain_value(True) == "true"
    assert plain_value(None) == "-"


def test_renderer_formats():
    record = OutputRecord("demo", ["x", "y"])
    record.add_row(1, XRat(1, 3))
    record.add_row(10, INF)
    record.add_summary("rows", 2)

    plain = TableRenderer("plain").render(record).splitlines()
    assert plain == [" x    y", " 1  1/3", "10  INF", "rows = 2"]

    assert TableRenderer("csv").render(record) == "x,y\n1,1/3\n10,INF\n"

    payload = json.loads(TableRenderer("json").render(record))
    assert payload["rows"] == [[1, {"num": 1, "den": 3}], [10, {"num": "INF", "den": None}]]
    assert payload["summary"] == {"rows": 2}
    assert "document" not in payload
