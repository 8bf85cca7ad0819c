"""
Presentaciones de los grupos fundamentales orbifold de las configuraciones de Apolonio.

Convención de símbolos: τ = "t", κ = "k", σ = "s"; τ_i = "t{i}", κ_i = "k{i}".
Un peso INF omite su relator de potencia.
"""

from numerics import is_inf_weight

from .presentation import Presentation, commutator, concat, inverse, letter, power, word


def _power_relator(w, weight):
    """[] si el peso es INF o 1, [w^peso] en otro caso."""
    if is_inf_weight(weight) or int(weight) == 1:
        return []
    return [power(w, int(weight))]


def _square_braid(x, y):
    """(xy)² = (yx)² como relator."""
    return concat(power(concat(x, y), 2), inverse(power(concat(y, x), 2)))


def build_apollonius_pi1(n):
    """
    π₁(P² − A_n) con meridianos τ_i de las tangentes T_i y κ_i de la cónica.

    Relatores:
        κ_i = τ_i κ_{i−1} τ_i⁻¹              (2 ≤ i ≤ n)
        (κ_i τ_i)² = (τ_i κ_i)²              (1 ≤ i ≤ n)
        [κ_i⁻¹ τ_i κ_i, τ_j] = 1             (i < j)
        τ_n ⋯ τ_1 κ_1² = 1

    Args:
        n (int): Número de tangentes (≥ 1)

    Returns:
        Presentation: 2n generadores
    """
    n = int(n)
    if n < 1:
        raise ValueError("n debe ser ≥ 1")
    t = {i: letter(f"t{i}") for i in range(1, n + 1)}
    k = {i: letter(f"k{i}") for i in range(1, n + 1)}
    relators = []
    for i in range(2, n + 1):
        relators.append(concat(k[i], inverse(concat(t[i], k[i - 1], inverse(t[i])))))
    for i in range(1, n + 1):
        relators.append(_square_braid(k[i], t[i]))
    for i in range(1, n + 1):
        conjugate = concat(inverse(k[i]), t[i], k[i])
        for j in range(i + 1, n + 1):
            relators.append(commutator(conjugate, t[j]))
    relators.append(concat(*[t[i] for i in range(n, 0, -1)], power(k[1], 2)))
    generators = tuple(f"t{i}" for i in range(1, n + 1)) + tuple(f"k{i}" for i in range(1, n + 1))
    return Presentation(generators, tuple(relators), f"pi1(A_{n})")


def build_a2(a, b):
    """
    π₁^orb(A(a; b, b)) en la forma corta ⟨τ, κ | (τκ)² = (κτ)²⟩.

    El meridiano de T₂ es κ⁻²τ⁻¹, así que lleva también el exponente b.
    """
    t, k = letter("t"), letter("k")
    relators = [_square_braid(t, k)]
    relators += _power_relator(k, a)
    relators += _power_relator(t, b)
    relators += _power_relator(concat(inverse(power(k, 2)), inverse(t)), b)
    return Presentation(("t", "k"), tuple(relators), f"A({a};{b},{b})")


def build_modular(a, b1, b2, b3):
    """
    π₁^orb(A(a; b₁, b₂, b₃)) con generadores κ, τ, σ.

    Relatores: (τκ)² = (κτ)², (σκ)² = (κσ)², [σ, τ] = 1 y las potencias
    κ^a = τ^b₁ = σ^b₂ = (κτκσ)^b₃ = 1; un peso INF omite la suya.
    """
    k, t, s = letter("k"), letter("t"), letter("s")
    relators = [_square_braid(t, k), _square_braid(s, k), commutator(s, t)]
    relators += _power_relator(k, a)
    relators += _power_relator(t, b1)
    relators += _power_relator(s, b2)
    relators += _power_relator(word("k", "t", "k", "s"), b3)
    return Presentation(("k", "t", "s"), tuple(relators), f"A({a};{b1},{b2},{b3})")


def build_coordinate_triangle(m):
    """
    π₁^orb(P², m·(T₁ + T₂ + T₃)) para el triángulo de coordenadas: (Z/m)².
    """
    m = int(m)
    t1, t2, t3 = letter("t1"), letter("t2"), letter("t3")
    relators = [commutator(t1, t2), commutator(t1, t3), commutator(t2, t3)]
    for t in (t1, t2, t3):
        relators += _power_relator(t, m)
    relators.append(concat(t3, t2, t1))
    return Presentation(("t1", "t2", "t3"), tuple(relators), f"triangle({m})")


def build_local_triple(b1, b2, b3):
    """
    Grupo orbifold local de un punto triple ordinario con pesos b₁, b₂, b₃.

    ⟨x₁, x₂, x₃ | x₁x₂x₃ = x₂x₃x₁ = x₃x₁x₂, x_i^b_i⟩; su orden es el orden local
    4[Σ1/b − 1]⁻² cuando es finito.
    """
    x1, x2, x3 = letter("x1"), letter("x2"), letter("x3")
    product_123 = concat(x1, x2, x3)
    relators = [
        concat(product_123, inverse(concat(x2, x3, x1))),
        concat(product_123, inverse(concat(x3, x1, x2))),
    ]
    for x, weight in ((x1, b1), (x2, b2), (x3, b3)):
        relators += _power_relator(x, weight)
    return Presentation(("x1", "x2", "x3"), tuple(relators), f"triple({b1},{b2},{b3})")
