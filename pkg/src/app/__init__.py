"""
Módulo de la aplicación.
Contiene el coordinador de la línea de comandos y la batería de verificación.
"""

from .orbifold_app import OrbifoldApp, build_parser
from .verification import CriterionResult, VerificationSuite

__all__ = ['OrbifoldApp', 'build_parser', 'CriterionResult', 'VerificationSuite']
