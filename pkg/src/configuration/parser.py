"""
Lectura y escritura del formato de documento de configuraciones.

Gramática (UTF-8, orientada a líneas):

    label <texto libre>
    component <id> degree=<int> euler=<int> weight=<int|INF> [kind=<line|quadric|general>]
    point <id> type=<tipo> on=<id[:ramas]>,<id[:ramas]>,...
    # comentario

Los tipos de punto son node, tacnode, triple, cusp, power:<m>, ordinary:<r>,
tangent:<c> y pencil:<s>:<c>[:t] (la incidencia transversal va la última).
"""

import re

from errors import ConfigSyntaxError, DuplicateId, UndefinedForm, UnknownComponent
from numerics import parse_weight, render_weight

from .model import (
    KINDS,
    CurveComponent,
    OrbifoldConfig,
    SingularPointRec,
    kind_for_degree,
    parse_local_type,
)


COMPONENT_KEYS = ("degree", "euler", "weight", "kind")
POINT_KEYS = ("type", "on")
TOKEN_RE = re.compile(r"\S+")


# ============================================================================
# CLASE: ConfigParser
# Propósito: Convertir un documento de texto en OrbifoldConfig
# Responsabilidades:
#   - Tokenizar cada línea conservando la columna de cada token
#   - Resolver ids y reportar errores con línea y columna
# ============================================================================
class ConfigParser:
    """Parser de una pasada del formato de configuración."""

    def __init__(self, text):
        self.text = text
        self.label = ""
        self.components = []
        self.points = []
        self._component_ids = set()
        self._point_ids = set()

    def parse(self):
        """
        Analiza el documento completo.

        Returns:
            OrbifoldConfig: Configuración estructuralmente válida

        Raises:
            ConfigSyntaxError: Línea mal formada
            UnknownComponent: Punto sobre una componente no declarada
            DuplicateId: Id de componente o de punto repetido
        """
        for number, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            tokens = _tokenize(line)
            keyword, column = tokens[0]
            if keyword == "label":
                self.label = line[column - 1 + len("label"):].strip()
            elif keyword == "component":
                self._parse_component(tokens, number)
            elif keyword == "point":
                self._parse_point(tokens, number)
            else:
                raise ConfigSyntaxError(f"palabra clave desconocida '{keyword}'", number, column)
        return OrbifoldConfig(self.components, self.points, self.label)

    # ------------------------------------------------------------------
    def _parse_component(self, tokens, number):
        if len(tokens) < 2:
            raise ConfigSyntaxError("falta el id de la componente", number, tokens[0][1] + 9)
        cid, column = tokens[1]
        if cid in self._component_ids:
            raise DuplicateId(f"línea {number}: componente repetida {cid}")
        fields = _key_values(tokens[2:], COMPONENT_KEYS, number)
        for key in ("degree", "euler", "weight"):
            if key not in fields:
                raise ConfigSyntaxError(f"componente {cid}: falta {key}=", number, column)
        degree = _integer(fields["degree"], number)
        euler = _integer(fields["euler"], number)
        try:
            weight = parse_weight(fields["weight"][0])
        except (ValueError, UndefinedForm) as exc:
            raise ConfigSyntaxError(str(exc), number, fields["weight"][1]) from exc
        kind = fields["kind"][0] if "kind" in fields else kind_for_degree(degree)
        if kind not in KINDS:
            raise ConfigSyntaxError(f"tipo de componente desconocido '{kind}'", number, fields["kind"][1])
        try:
            component = CurveComponent(cid, degree, euler, weight, kind)
        except ValueError as exc:
            raise ConfigSyntaxError(str(exc), number, column) from exc
        self._component_ids.add(cid)
        self.components.append(component)

    def _parse_point(self, tokens, number):
        if len(tokens) < 2:
            raise ConfigSyntaxError("falta el id del punto", number, tokens[0][1] + 5)
        pid, column = tokens[1]
        if pid in self._point_ids:
            raise DuplicateId(f"línea {number}: punto repetido {pid}")
        fields = _key_values(tokens[2:], POINT_KEYS, number)
        for key in POINT_KEYS:
            if key not in fields:
                raise ConfigSyntaxError(f"punto {pid}: falta {key}=", number, column)
        type_text, type_column = fields["type"]
        try:
            local_type = parse_local_type(type_text)
        except ValueError as exc:
            raise ConfigSyntaxError(str(exc), number, type_column) from exc
        on_text, on_column = fields["on"]
        incidences = []
        for item in on_text.split(","):
            cid, _, count = item.partition(":")
            if not cid:
                raise ConfigSyntaxError("incidencia vacía", number, on_column)
            if cid not in self._component_ids:
                raise UnknownComponent(f"línea {number}: componente no declarada {cid}")
            incidences.append((cid, _integer((count or "1", on_column), number)))
        try:
            point = SingularPointRec(pid, local_type, tuple(incidences))
        except ValueError as exc:
            raise ConfigSyntaxError(str(exc), number, column) from exc
        self._point_ids.add(pid)
        self.points.append(point)


def _tokenize(line):
    """Tokens separados por blancos (espacios o tabuladores), con su columna (base 1)."""
    return [(match.group(), match.start() + 1) for match in TOKEN_RE.finditer(line)]


def _key_values(tokens, allowed, number):
    fields = {}
    for text, column in tokens:
        key, sep, value = text.partition("=")
        if not sep or not value:
            raise ConfigSyntaxError(f"se esperaba clave=valor, no '{text}'", number, column)
        if key not in allowed:
            raise ConfigSyntaxError(f"clave desconocida '{key}'", number, column)
        if key in fields:
            raise ConfigSyntaxError(f"clave repetida '{key}'", number, column)
        fields[key] = (value, column + len(key) + 1)
    return fields


def _integer(field, number):
    text, column = field
    try:
        return int(text)
    except ValueError:
        raise ConfigSyntaxError(f"se esperaba un entero, no '{text}'", number, column) from None


def parse_config(text):
    """Atajo: ConfigParser(text).parse()."""
    return ConfigParser(text).parse()


def render_config(config, checks=None):
    """
    Escribe una configuración en el formato de documento.

    Args:
        config (OrbifoldConfig): Configuración a escribir
        checks (list): Líneas opcionales de resumen, emitidas como comentarios
            "# check ..." para que el documento siga siendo legible por parse_config

    Returns:
        str: Documento terminado en salto de línea
    """
    lines = []
    if config.label:
        lines.append(f"label {config.label}")
    for comp in config.components:
        lines.append(
            f"component {comp.id} degree={comp.degree} euler={comp.euler_set} "
            f"weight={render_weight(comp.weight)} kind={comp.kind}"
        )
    for point in config.points:
        on = ",".join(cid if n == 1 else f"{cid}:{n}" for cid, n in point.incidences)
        lines.append(f"point {point.id} type={point.local_type.code()} on={on}")
    for check in checks or []:
        lines.append(f"# check {check}")
    return "\n".join(lines) + "\n"
