# core/__init__.py
"""
Núcleo de la biblioteca de arboricidad equitativa: grafos, coloraciones,
oráculo exacto, familias, teoremas y sondeos.
"""

__version__ = "1.0.0"
