# ui/__init__.py
"""
Interfaz de línea de comandos de la biblioteca de arboricidad equitativa.
"""

__version__ = "1.0.0"
__all__ = ["linea_comandos"]
