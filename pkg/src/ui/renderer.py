"""
Renderizado de resultados en texto plano, CSV o JSON.

Este módulo contiene OutputRecord (lo que produce cada comando) y
TableRenderer (cómo se escribe en la salida estándar).
"""

import csv
import io
import json
from dataclasses import dataclass, field

from numerics import XRat


@dataclass
class OutputRecord:
    """
    Resultado de un comando.

    Atributos:
        command: Eco del comando ejecutado
        columns: Nombres de columna de la tabla (puede estar vacía)
        rows: Filas de la tabla, en orden estable
        summary: Pares (clave, valor) de resumen
        document: Texto libre adicional (p. ej. un documento de configuración)
    """

    command: str
    columns: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    summary: list = field(default_factory=list)
    document: str = ""

    def add_row(self, *values):
        self.rows.append(list(values))

    def add_summary(self, key, value):
        self.summary.append((key, value))

    def get(self, key, default=None):
        for name, value in self.summary:
            if name == key:
                return value
        return default


def plain_value(value):
    """Valor como texto: fracciones p/q, INF, listas separadas por comas."""
    if isinstance(value, XRat):
        return value.render()
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return ",".join(plain_value(v) for v in value)
    return str(value)


def json_value(value):
    """Valor serializable: fracciones como {"num": p, "den": q}."""
    if isinstance(value, XRat):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [json_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): json_value(v) for k, v in value.items()}
    if hasattr(value, "to_json"):
        return json_value(value.to_json())
    return value


# ============================================================================
# CLASE: TableRenderer
# Propósito: Escribir un OutputRecord en el formato pedido
# Responsabilidades:
#   - Tabla alineada y líneas clave=valor en texto plano
#   - CSV con cabecera y orden de filas estable
#   - JSON con claves ordenadas (salida idéntica byte a byte)
# ============================================================================
class TableRenderer:
    """Convierte un OutputRecord en texto según el formato configurado."""

    def __init__(self, output_format="plain"):
        self.output_format = output_format

    def render(self, record):
        """
        Args:
            record (OutputRecord): Resultado a escribir

        Returns:
            str: Texto terminado en salto de línea
        """
        if self.output_format == "json":
            return self.render_json(record)
        if self.output_format == "csv":
            return self.render_csv(record)
        return self.render_plain(record)

    def render_plain(self, record):
        lines = []
        if record.columns:
            cells = [[str(c) for c in record.columns]]
            cells += [[plain_value(v) for v in row] for row in record.rows]
            widths = [max(len(row[i]) for row in cells) for i in range(len(record.columns))]
            for row in cells:
                lines.append("  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip())
        if record.summary:
            width = max(len(key) for key, _ in record.summary)
            for key, value in record.summary:
                lines.append(f"{key.ljust(width)} = {plain_value(value)}")
        text = "\n".join(lines)
        if record.document:
            text = (text + "\n" if text else "") + record.document.rstrip("\n")
        return text + "\n"

    def render_csv(self, record):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if record.columns:
            writer.writerow(record.columns)
            for row in record.rows:
                writer.writerow([plain_value(v) for v in row])
        else:
            writer.writerow(["key", "value"])
            for key, value in record.summary:
                writer.writerow([key, plain_value(value)])
        return buffer.getvalue()

    def render_json(self, record):
        payload = {
            "command": record.command,
            "summary": {key: json_value(value) for key, value in record.summary},
        }
        if record.columns:
            payload["columns"] = list(record.columns)
            payload["rows"] = [json_value(row) for row in record.rows]
        if record.document:
            payload["document"] = record.document
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
