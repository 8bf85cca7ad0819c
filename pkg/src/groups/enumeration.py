"""
Enumeración de clases laterales (Todd–Coxeter) sobre el subgrupo trivial.

Dos motores de sympy, ambos con propagación de deducciones y fusión de
coincidencias:
    - felsch: `coset_enumeration_c`, define la primera entrada vacía de la
      tabla y deduce antes de seguir. Define muchas menos clases en los grupos
      esféricos grandes y es el de por defecto.
    - hlt: `coset_enumeration_r`, define clases al recorrer las tablas de
      relatores.
Con el mismo motor el resultado es determinista.
"""

from dataclasses import dataclass

from errors import CosetOverflow

STATUS_COMPLETE = "complete"
STATUS_OVERFLOW = "overflow"
STRATEGIES = ("felsch", "hlt")


# ============================================================================
# CLASE: CosetTable
# Propósito: Resultado de una enumeración
# Responsabilidades:
#   - Guardar la tabla clase × generador^±1 → clase
#   - Indicar si terminó o si superó el límite
# ============================================================================
@dataclass(frozen=True)
class CosetTable:
    """
    Atributos:
        rows: Filas de la tabla (fila 0 = el subgrupo); columnas x0, x0⁻¹, x1, ...
        live: Número de clases vivas
        status: "complete" u "overflow"
        max_cosets: Límite usado
    """

    rows: tuple
    live: int
    status: str
    max_cosets: int

    @property
    def complete(self):
        return self.status == STATUS_COMPLETE

    @property
    def order(self):
        """|G| si la enumeración terminó, None en otro caso."""
        return self.live if self.complete else None

    def is_permutation_action(self):
        """Cada columna de una tabla completa es una permutación de las clases."""
        if not self.complete:
            return False
        for column in range(len(self.rows[0]) if self.rows else 0):
            image = [row[column] for row in self.rows]
            if None in image or sorted(image) != list(range(self.live)):
                return False
        return True


def _engine(strategy):
    from sympy.combinatorics.coset_table import coset_enumeration_c, coset_enumeration_r

    if strategy not in STRATEGIES:
        raise ValueError(f"estrategia desconocida: {strategy} (use {', '.join(STRATEGIES)})")
    return coset_enumeration_c if strategy == "felsch" else coset_enumeration_r


def enumerate_cosets(presentation, max_cosets, strategy="felsch"):
    """
    Enumera las clases laterales del subgrupo trivial.

    Args:
        presentation (Presentation): Grupo a enumerar
        max_cosets (int): Límite de clases definidas
        strategy (str): "felsch" o "hlt"

    Returns:
        CosetTable: Con estado "overflow" si se superó el límite
    """
    if max_cosets < 1:
        raise ValueError("max_cosets debe ser ≥ 1")
    engine = _engine(strategy)
    if not presentation.generators:
        return CosetTable(((),), 1, STATUS_COMPLETE, max_cosets)

    group = presentation.to_sympy()
    try:
        table = engine(group, [], max_cosets=max_cosets)
    except ValueError:
        # sympy señala el límite con ValueError
        return CosetTable((), 0, STATUS_OVERFLOW, max_cosets)
    table.compress()
    table.standardize()
    rows = tuple(tuple(row) for row in table.table)
    return CosetTable(rows, len(rows), STATUS_COMPLETE, max_cosets)


def todd_coxeter(presentation, max_cosets, strategy="felsch"):
    """
    Orden del grupo presentado.

    Returns:
        int: |G|

    Raises:
        CosetOverflow: Si se superó max_cosets (posiblemente infinito, o límite bajo)
    """
    table = enumerate_cosets(presentation, max_cosets, strategy)
    if not table.complete:
        raise CosetOverflow(max_cosets, presentation.label)
    return table.order


def quotient_orders(presentation, extras, max_cosets, strategy="felsch"):
    """
    Órdenes de los cocientes por cada conjunto de relatores adicionales.

    Args:
        presentation (Presentation): Grupo base
        extras (list[list[word]]): Conjuntos de relatores
        max_cosets (int): Límite por enumeración
        strategy (str): Motor de enumeración

    Returns:
        list[int | None]: Orden de cada cociente, None si desbordó
    """
    orders = []
    for extra in extras:
        table = enumerate_cosets(presentation.with_relators(extra), max_cosets, strategy)
        orders.append(table.order)
    return orders
