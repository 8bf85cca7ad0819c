"""
Presentaciones finitas de grupos y su formato de texto.

Una palabra es una tupla de letras (símbolo, ±1) libremente reducida.

Formato de texto:
    gens: a b c
    rel: (a b)^2 = (b a)^2
    rel: a^4
    rel: [a, b]
Los inversos se escriben a' (o a^-1); `1` es la palabra vacía; `#` comenta.
"""

import re
from dataclasses import dataclass

from errors import PresentationSyntaxError


# ============================================================================
# PALABRAS
# ============================================================================
def free_reduce(letters):
    """Cancela pares x x⁻¹ adyacentes."""
    out = []
    for symbol, sign in letters:
        if out and out[-1][0] == symbol and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((symbol, sign))
    return tuple(out)


def inverse(word):
    return tuple((symbol, -sign) for symbol, sign in reversed(word))


def power(word, exponent):
    if exponent < 0:
        return free_reduce(inverse(word) * (-exponent))
    return free_reduce(tuple(word) * exponent)


def concat(*words):
    letters = []
    for word in words:
        letters.extend(word)
    return free_reduce(letters)


def commutator(u, v):
    """[u, v] = u v u⁻¹ v⁻¹."""
    return concat(u, v, inverse(u), inverse(v))


def letter(symbol, sign=1):
    return ((symbol, sign),)


def word(*symbols):
    """Palabra positiva a partir de símbolos; un símbolo terminado en ' es inverso."""
    return free_reduce((s.rstrip("'"), -1 if s.endswith("'") else 1) for s in symbols)


def render_word(w):
    if not w:
        return "1"
    return " ".join(symbol + ("'" if sign < 0 else "") for symbol, sign in w)


def exponent_sum(w, symbol):
    return sum(sign for s, sign in w if s == symbol)


# ============================================================================
# CLASE: Presentation
# Propósito: Grupo finitamente presentado ⟨generadores | relatores⟩
# ============================================================================
@dataclass(frozen=True)
class Presentation:
    """
    Atributos:
        generators: Símbolos distintos
        relators: Palabras libremente reducidas (las vacías se descartan)
        label: Nombre descriptivo
    """

    generators: tuple
    relators: tuple
    label: str = ""

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError(f"generadores repetidos en {gens}")
        rels = []
        for rel in self.relators:
            reduced = free_reduce(rel)
            for symbol, _ in reduced:
                if symbol not in gens:
                    raise ValueError(f"símbolo {symbol} fuera de los generadores")
            if reduced:
                rels.append(reduced)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    def with_relators(self, extra, label=None):
        """Cociente por relatores adicionales."""
        return Presentation(self.generators, self.relators + tuple(extra), label or self.label)

    def relabel(self, mapping):
        """Renombra generadores (mapping: viejo → nuevo)."""
        gens = tuple(mapping.get(g, g) for g in self.generators)
        rels = tuple(tuple((mapping.get(s, s), e) for s, e in rel) for rel in self.relators)
        return Presentation(gens, rels, self.label)

    def render(self):
        lines = [f"gens: {' '.join(self.generators)}"]
        lines += [f"rel: {render_word(rel)}" for rel in self.relators]
        return "\n".join(lines) + "\n"

    def to_sympy(self):
        """
        Traduce a un FpGroup de sympy con generadores ASCII x0, x1, ...

        Returns:
            FpGroup
        """
        from sympy.combinatorics.fp_groups import FpGroup
        from sympy.combinatorics.free_groups import free_group

        names = [f"x{i}" for i in range(len(self.generators))]
        free, *gens = free_group(",".join(names)) if names else (free_group("")[0],)
        index = {symbol: gens[i] for i, symbol in enumerate(self.generators)}
        relators = []
        for rel in self.relators:
            element = free.identity
            for symbol, sign in rel:
                element = element * index[symbol] ** sign
            relators.append(element)
        return FpGroup(free, relators)


# ============================================================================
# PARSER DEL FORMATO DE TEXTO
# ============================================================================
_TOKEN = re.compile(r"\s*(?:(?P<ident>[^\W\d][\w]*)|(?P<int>-?\d+)|(?P<op>[()\[\]^=,']))")


class _WordParser:
    """Descenso recursivo sobre los tokens de una relación."""

    def __init__(self, text, number, generators):
        self.text = text
        self.number = number
        self.generators = generators
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text):
        tokens = []
        index = 0
        while index < len(text):
            if text[index].isspace():
                index += 1
                continue
            match = _TOKEN.match(text, index)
            if not match or match.end() == index:
                raise PresentationSyntaxError(f"línea {self.number}: carácter inesperado '{text[index]}'")
            kind = match.lastgroup
            tokens.append((kind, match.group(kind)))
            index = match.end()
        return tokens

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def _take(self, value=None):
        kind, text = self._peek()
        if kind is None or (value is not None and text != value):
            raise PresentationSyntaxError(f"línea {self.number}: se esperaba '{value or 'token'}'")
        self.pos += 1
        return kind, text

    def relation(self):
        left = self.word()
        if self._peek()[1] == "=":
            self._take("=")
            right = self.word()
            left = concat(left, inverse(right))
        if self.pos != len(self.tokens):
            raise PresentationSyntaxError(f"línea {self.number}: sobra '{self._peek()[1]}'")
        return left

    def word(self):
        letters = ()
        while self._peek()[0] in ("ident", "int") or self._peek()[1] in ("(", "["):
            letters = concat(letters, self.factor())
        return letters

    def factor(self):
        base = self.atom()
        while self._peek()[1] == "'":
            self._take("'")
            base = inverse(base)
        if self._peek()[1] == "^":
            self._take("^")
            kind, text = self._take()
            if kind != "int":
                raise PresentationSyntaxError(f"línea {self.number}: exponente no entero '{text}'")
            base = power(base, int(text))
        return base

    def atom(self):
        kind, text = self._take()
        if kind == "ident":
            if text not in self.generators:
                raise PresentationSyntaxError(f"línea {self.number}: generador desconocido '{text}'")
            return letter(text)
        if kind == "int":
            if text != "1":
                raise PresentationSyntaxError(f"línea {self.number}: entero suelto '{text}'")
            return ()
        if text == "(":
            inner = self.word()
            self._take(")")
            return inner
        if text == "[":
            u = self.word()
            self._take(",")
            v = self.word()
            self._take("]")
            return commutator(u, v)
        raise PresentationSyntaxError(f"línea {self.number}: token inesperado '{text}'")


def parse_presentation(text):
    """
    Lee una presentación en formato de texto.

    Una relación u = v se guarda como el relator reducido u v⁻¹.

    Raises:
        PresentationSyntaxError: Línea mal formada o símbolo desconocido
    """
    generators = None
    relators = []
    label = ""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise PresentationSyntaxError(f"línea {number}: se esperaba 'gens:', 'rel:' o 'label:'")
        if key == "gens":
            if generators is not None:
                raise PresentationSyntaxError(f"línea {number}: 'gens:' repetido")
            generators = tuple(rest.split())
            if len(set(generators)) != len(generators):
                raise PresentationSyntaxError(f"línea {number}: generadores repetidos")
        elif key == "rel":
            if generators is None:
                raise PresentationSyntaxError(f"línea {number}: 'rel:' antes de 'gens:'")
            relators.append(_WordParser(rest, number, generators).relation())
        elif key == "label":
            label = rest.strip()
        else:
            raise PresentationSyntaxError(f"línea {number}: clave desconocida '{key}'")
    if generators is None:
        raise PresentationSyntaxError("falta la línea 'gens:'")
    return Presentation(generators, tuple(relators), label)
