"""
Aritmética racional exacta extendida con un único infinito sin signo.

Todos los invariantes (e, c1², órdenes locales, inversos de pesos) viven en
XRat. No hay coma flotante en ningún punto del proyecto.
"""

from fractions import Fraction
from functools import total_ordering

from errors import UndefinedForm


# ============================================================================
# CLASE: XRat
# Propósito: Racional exacto p/q o el valor distinguido INF
# Responsabilidades:
#   - Mantener la fracción reducida con denominador positivo (Fraction)
#   - Aplicar las reglas de absorción de INF y rechazar formas indefinidas
#   - Renderizar y leer "p/q", "p", "INF" y la forma JSON {"num", "den"}
# ============================================================================
@total_ordering
class XRat:
    """
    Número racional extendido e inmutable.

    Reglas con INF:
        - INF + finito = INF, INF · positivo = INF, 1/INF = 0
        - 0 · INF, INF − INF, INF / INF y x / 0 lanzan UndefinedForm
        - −INF no es representable: cualquier resultado negativo infinito falla
    """

    __slots__ = ("_value",)

    def __init__(self, value=0, denominator=None):
        """
        Args:
            value (int | Fraction | str | XRat): Valor inicial
            denominator (int): Denominador opcional cuando value es entero
        """
        if isinstance(value, XRat):
            object.__setattr__(self, "_value", value._value)
            return
        if isinstance(value, str):
            object.__setattr__(self, "_value", XRat.parse(value)._value)
            return
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"XRat no admite {type(value).__name__}")
        if denominator is not None:
            if denominator == 0:
                raise UndefinedForm(f"{value}/0")
            value = Fraction(value, denominator)
        object.__setattr__(self, "_value", Fraction(value))

    def __setattr__(self, name, value):
        raise AttributeError("XRat es inmutable")

    # ------------------------------------------------------------------
    # Constructores
    # ------------------------------------------------------------------
    @classmethod
    def infinity(cls):
        """Retorna el valor INF (usar la constante de módulo INF)."""
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_value", None)
        return obj

    @classmethod
    def of(cls, value):
        """Convierte int, Fraction, str o XRat en XRat."""
        if isinstance(value, XRat):
            return value
        return cls(value)

    @classmethod
    def parse(cls, text):
        """
        Lee "p/q", "p" o "INF" (también "inf" y "∞").

        Raises:
            ValueError: Si el texto no es un racional válido
        """
        token = text.strip()
        if token.upper() == "INF" or token == "∞":
            return INF
        if "/" in token:
            num, den = token.split("/", 1)
            if int(den) == 0:
                raise UndefinedForm(f"{token}: denominador cero")
            return cls(Fraction(int(num), int(den)))
        return cls(int(token))

    @classmethod
    def from_json(cls, payload):
        """Inversa de to_json()."""
        if payload["den"] is None:
            return INF
        return cls(Fraction(int(payload["num"]), int(payload["den"])))

    # ------------------------------------------------------------------
    # Consultas
    # ------------------------------------------------------------------
    @property
    def is_inf(self):
        return self._value is None

    @property
    def is_finite(self):
        return self._value is not None

    @property
    def is_integer(self):
        return self._value is not None and self._value.denominator == 1

    @property
    def numerator(self):
        self._require_finite("numerator")
        return self._value.numerator

    @property
    def denominator(self):
        self._require_finite("denominator")
        return self._value.denominator

    def as_fraction(self):
        """Retorna la Fraction subyacente (falla con INF)."""
        self._require_finite("as_fraction")
        return self._value

    def sign(self):
        """+1, 0 o −1 (INF es positivo)."""
        if self._value is None:
            return 1
        return (self._value > 0) - (self._value < 0)

    def _require_finite(self, what):
        if self._value is None:
            raise UndefinedForm(f"{what} de INF")

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_inf or other.is_inf:
            return INF
        return XRat(self._value + other._value)

    __radd__ = __add__

    def __neg__(self):
        if self.is_inf:
            raise UndefinedForm("−INF no es representable")
        return XRat(-self._value)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_inf:
            raise UndefinedForm(f"{self} − INF")
        if self.is_inf:
            return INF
        return XRat(self._value - other._value)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other.__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_inf or other.is_inf:
            finite = other if self.is_inf else self
            if finite.is_inf or finite.sign() > 0:
                return INF
            raise UndefinedForm(f"{self} × {other}")
        return XRat(self._value * other._value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_inf:
            if self.is_inf:
                raise UndefinedForm("INF / INF")
            return ZERO
        if other._value == 0:
            raise UndefinedForm(f"{self} / 0")
        if self.is_inf:
            if other._value > 0:
                return INF
            raise UndefinedForm(f"INF / {other}")
        return XRat(self._value / other._value)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other.__truediv__(self)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        if exponent == 0:
            return ONE
        if self.is_inf:
            return INF if exponent > 0 else ZERO
        if exponent < 0 and self._value == 0:
            raise UndefinedForm(f"0 ** {exponent}")
        return XRat(self._value ** exponent)

    def reciprocal(self):
        """1/x con 1/INF = 0."""
        return ONE / self

    # ------------------------------------------------------------------
    # Orden total (INF mayor que todo finito)
    # ------------------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._value == other._value

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_inf:
            return False
        if other.is_inf:
            return True
        return self._value < other._value

    def __hash__(self):
        if self._value is None:
            return hash("INF")
        return hash(self._value)

    def __bool__(self):
        return self._value is None or self._value != 0

    # ------------------------------------------------------------------
    # Renderizado
    # ------------------------------------------------------------------
    def render(self):
        """"p/q", "p" (entero) o "INF"."""
        if self.is_inf:
            return "INF"
        if self._value.denominator == 1:
            return str(self._value.numerator)
        return f"{self._value.numerator}/{self._value.denominator}"

    def to_json(self):
        """{"num": p, "den": q}; INF se escribe {"num": "INF", "den": null}."""
        if self.is_inf:
            return {"num": "INF", "den": None}
        return {"num": self._value.numerator, "den": self._value.denominator}

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"XRat('{self.render()}')"


def _coerce(value):
    if isinstance(value, XRat):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return XRat(value)
    return NotImplemented


INF = XRat.infinity()
ZERO = XRat(0)
ONE = XRat(1)


def weight_reciprocal(weight):
    """
    Inverso exacto de un peso.

    Args:
        weight (int | XRat): Entero ≥ 1 o INF

    Returns:
        XRat: 1/weight, con 1/INF = 0
    """
    if isinstance(weight, XRat):
        if weight.is_inf:
            return ZERO
        return weight.reciprocal()
    if weight < 1:
        raise ValueError(f"peso inválido: {weight}")
    return XRat(Fraction(1, weight))


def is_inf_weight(weight):
    return isinstance(weight, XRat) and weight.is_inf


def parse_weight(text):
    """Lee un peso: entero ≥ 1 o INF."""
    value = XRat.parse(text)
    if value.is_inf:
        return INF
    if not value.is_integer or value.numerator < 1:
        raise ValueError(f"peso inválido: {text}")
    return value.numerator


def render_weight(weight):
    return "INF" if is_inf_weight(weight) else str(weight)


def weight_key(weight):
    """Clave de orden para pesos (INF al final)."""
    return (1, 0) if is_inf_weight(weight) else (0, weight)


def compare(lhs, rhs):
    """Comparación total: −1, 0 o 1."""
    lhs, rhs = XRat.of(lhs), XRat.of(rhs)
    return (lhs > rhs) - (lhs < rhs)
