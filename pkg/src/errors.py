"""
Jerarquía de excepciones compartida por todos los paquetes.

Cada excepción lleva el código de salida que la línea de comandos devuelve
cuando la excepción llega hasta main.py.
"""


# ============================================================================
# CLASE: OrbifoldError
# Propósito: Base común de todos los errores del proyecto
# Responsabilidades:
#   - Transportar un mensaje legible para la consola
#   - Transportar el código de salida asociado
# ============================================================================
class OrbifoldError(Exception):
    """Error base. `exit_code` es el código con el que termina la CLI."""

    exit_code = 1


# ----------------------------------------------------------------------------
# Aritmética exacta
# ----------------------------------------------------------------------------
class UndefinedForm(OrbifoldError):
    """Operación sin valor definido: 0·INF, INF−INF, división por cero."""


# ----------------------------------------------------------------------------
# Lectura de documentos (código 2)
# ----------------------------------------------------------------------------
class ConfigSyntaxError(OrbifoldError):
    """Error de sintaxis en un documento de configuración."""

    exit_code = 2

    def __init__(self, message, line=0, column=0):
        super().__init__(f"línea {line}, columna {column}: {message}")
        self.line = line
        self.column = column


class UnknownComponent(OrbifoldError):
    """Un punto referencia una componente no declarada."""

    exit_code = 2


class DuplicateId(OrbifoldError):
    """Identificador de componente o de punto repetido."""

    exit_code = 2


class PresentationSyntaxError(OrbifoldError):
    """Error de sintaxis en un documento de presentación de grupo."""

    exit_code = 2


# ----------------------------------------------------------------------------
# Admisibilidad y parámetros (código 3)
# ----------------------------------------------------------------------------
class ValidationFailed(OrbifoldError):
    """La configuración tiene violaciones de admisibilidad."""

    exit_code = 3

    def __init__(self, violations):
        lines = "; ".join(str(v) for v in violations)
        super().__init__(f"configuración no admisible: {lines}")
        self.violations = list(violations)


class InadmissibleWeights(OrbifoldError):
    """Los pesos violan la desigualdad local en sentido estricto."""

    exit_code = 3


class NonIntegralOrder(OrbifoldError):
    """El orden local finito no es un entero positivo."""

    exit_code = 3


class NegativeGenus(OrbifoldError):
    """(d−1)(d−2)/2 − κ − ν < 0."""

    exit_code = 3


class UnsupportedShape(OrbifoldError):
    """Lista de pesos fuera de las hipótesis de la clasificación de triángulos."""

    exit_code = 3


class EvenM(OrbifoldError):
    """El parámetro m debe ser impar."""

    exit_code = 3


class InvalidCover(OrbifoldError):
    """La terna de ramificación no cumple las hipótesis del cubrimiento de Kummer."""

    exit_code = 3


class PresetError(OrbifoldError):
    """Preset desconocido o número de parámetros incorrecto."""

    exit_code = 3


# ----------------------------------------------------------------------------
# Comprobaciones contra los datos publicados (código 4)
# ----------------------------------------------------------------------------
class PaperCheckFailed(OrbifoldError):
    """Los resultados no coinciden con los datos de referencia."""

    exit_code = 4


# ----------------------------------------------------------------------------
# Cubrimientos (código 5)
# ----------------------------------------------------------------------------
class UnsupportedLocalType(OrbifoldError):
    """El tipo local del punto no tiene levantamiento en el catálogo."""

    exit_code = 5

    def __init__(self, message, point_id=None):
        super().__init__(message if point_id is None else f"punto {point_id}: {message}")
        self.point_id = point_id


class ProfileInconsistency(OrbifoldError):
    """El perfil de incidencia no suma el grado de la componente."""

    exit_code = 5


class NonIntegralSplit(OrbifoldError):
    """El grado no se reparte por igual entre las componentes levantadas."""

    exit_code = 5


# ----------------------------------------------------------------------------
# Grupos
# ----------------------------------------------------------------------------
class CosetOverflow(OrbifoldError):
    """La enumeración superó el límite de clases laterales.

    No significa que el grupo sea infinito: sólo que el límite no bastó.
    """

    exit_code = 1

    def __init__(self, max_cosets, label=""):
        prefix = f"{label}: " if label else ""
        super().__init__(f"{prefix}más de {max_cosets} clases laterales (¿infinito o límite bajo?)")
        self.max_cosets = max_cosets
        self.label = label
