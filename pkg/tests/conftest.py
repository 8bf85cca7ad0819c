"""
Fixtures compartidas: ajustes, documentos de ejemplo y un ejecutor de la CLI.
"""

import pytest

from config.settings import OrbifoldSettings
from configuration import build_apollonius, render_config
from main import main


GENERAL_LINES_TEXT = """\
label cuatro rectas generales
component A degree=1 euler=2 weight=4
component B degree=1 euler=2 weight=4
component C degree=1 euler=2 weight=4
component D degree=1 euler=2 weight=4
point ab type=node on=A,B
point ac type=node on=A,C
point ad type=node on=A,D
point bc type=node on=B,C
point bd type=node on=B,D
point cd type=node on=C,D
"""


@pytest.fixture
def settings():
    return OrbifoldSettings()


@pytest.fixture
def general_lines_text():
    return GENERAL_LINES_TEXT


@pytest.fixture
def write_doc(tmp_path):
    """Escribe un documento en tmp_path y devuelve su ruta como texto."""
    def write(text, name="config.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def ball_doc(write_doc):
    """A(4;4,4,4): candidata a cociente de la bola con tres tacnodos de borde."""
    return write_doc(render_config(build_apollonius(4, [4, 4, 4])), "a4.txt")


@pytest.fixture
def run_cli(capsys):
    """
    Ejecuta main() y devuelve (código, stdout, stderr).

    Los errores de argparse salen con SystemExit; se traducen a su código.
    """
    def run(*argv):
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run
