"""
Configuración centralizada de la herramienta.

Los valores por defecto reproducen los límites de las tablas publicadas;
los flags de la línea de comandos los sobrescriben.
"""

from pathlib import Path

OUTPUT_FORMATS = ("plain", "csv", "json")


# ============================================================================
# CLASE: OrbifoldSettings
# Propósito: Parámetros de cálculo y de salida de la aplicación
# Responsabilidades:
#   - Guardar los límites de búsqueda y de enumeración
#   - Guardar las preferencias de salida (formato, verbosidad)
#   - Localizar los ficheros de datos de referencia
# ============================================================================
class OrbifoldSettings:
    """
    Ajustes de la herramienta.

    Grupos de opciones:
        - Enumeración de clases laterales (límite de clases)
        - Búsquedas (cotas de pesos y grados)
        - Verificación (semilla y número de casos aleatorios)
        - Salida (formato, verbosidad, modo estricto)
    """

    def __init__(self):
        """Inicializa los ajustes con valores por defecto."""
        # ====================================================================
        # GRUPOS
        # ====================================================================
        self.max_cosets = 10 ** 6           # Límite de clases laterales definidas
        self.coset_strategy = "felsch"      # felsch | hlt
        self.verify_max_weight = 5          # Pesos máximos en verify_orders
        self.abelian_max_m = 12             # Triángulo de coordenadas hasta m
        self.apollonius_pi1_max_n = 8       # π₁(A_n) hasta n

        # ====================================================================
        # BÚSQUEDAS
        # ====================================================================
        self.parabolic_cap = 60             # Cota de pesos finitos
        self.parabolic_max_n = 6            # Número máximo de tangentes
        self.cuspidal_d_max = 17            # Grado máximo de la curva cuspidal
        self.cuspidal_weights = (2, 3, 4, 5, 6)

        # ====================================================================
        # CUBRIMIENTOS Y VERIFICACIÓN
        # ====================================================================
        self.theorem1_steps = 5             # Pasos de la serie O₁ → O₂ → …
        self.random_cases = 500             # Vectores aleatorios en la equivalencia
        self.random_seed = 20240917         # Semilla fija: resultados reproducibles

        # ====================================================================
        # SALIDA
        # ====================================================================
        self.output_format = "plain"        # plain | csv | json
        self.verbose = False                # Mensajes de progreso en stderr
        self.strict = False                 # Desbordamiento de clases → código 1
        self.data_dir = Path(__file__).resolve().parent.parent / "data"

    def get_output_format(self):
        """
        Formato de salida validado.

        Raises:
            ValueError: Formato desconocido
        """
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"formato desconocido: {self.output_format}")
        return self.output_format

    def get_weight_domain(self, cap=None):
        """Pesos finitos 2..cap (cap por defecto: parabolic_cap)."""
        cap = self.parabolic_cap if cap is None else cap
        return list(range(2, cap + 1))

    def get_data_file(self, name):
        return Path(self.data_dir) / name

    def update(self, **overrides):
        """Aplica los valores no nulos (los flags que el usuario dio)."""
        for key, value in overrides.items():
            if value is None:
                continue
            if not hasattr(self, key):
                raise AttributeError(f"ajuste desconocido: {key}")
            setattr(self, key, value)
        return self
