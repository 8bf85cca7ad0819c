"""
Mensajes de diagnóstico en la salida de error.

Los resultados van a stdout a través del renderizador; aquí sólo se
escriben avisos cortos con un símbolo de estado.
"""

import sys

OK = "✓"
WARN = "⚠"
FAIL = "✗"


# ============================================================================
# CLASE: ConsoleFeedback
# Propósito: Diagnósticos legibles en stderr
# Responsabilidades:
#   - Prefijar cada mensaje con su símbolo de estado
#   - Silenciar el progreso salvo en modo verbose
# ============================================================================
class ConsoleFeedback:
    def __init__(self, settings, stream=None):
        """
        Args:
            settings (OrbifoldSettings): Ajustes (se consulta `verbose`)
            stream: Flujo de salida (stderr por defecto)
        """
        self.settings = settings
        self.stream = stream if stream is not None else sys.stderr

    def _emit(self, glyph, message):
        print(f"{glyph} {message}", file=self.stream)

    def success(self, message):
        self._emit(OK, message)

    def warning(self, message):
        self._emit(WARN, message)

    def error(self, message):
        self._emit(FAIL, message)

    def progress(self, message):
        """Sólo con --verbose."""
        if self.settings.verbose:
            self._emit("·", message)
