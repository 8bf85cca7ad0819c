"""
Módulo de interfaz de usuario.
Contiene el renderizador de resultados y los mensajes de consola.
"""

from .renderer import OutputRecord, TableRenderer, json_value, plain_value
from .feedback import ConsoleFeedback

__all__ = ['OutputRecord', 'TableRenderer', 'json_value', 'plain_value', 'ConsoleFeedback']
