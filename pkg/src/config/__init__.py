"""
Módulo de configuración de la herramienta.
Contiene los ajustes de cálculo y de salida.
"""

from .settings import OrbifoldSettings, OUTPUT_FORMATS

__all__ = ['OrbifoldSettings', 'OUTPUT_FORMATS']
