# utils/logger.py
"""
Logging de la biblioteca de arboricidad equitativa.

La consola escribe en stderr porque stdout queda reservado para el JSON de
la CLI. Con `logging.archivo_habilitado` se añade un archivo rotativo.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional

FORMATO = "[%(asctime)s] [%(levelname)-8s] [%(name)-20s] - %(message)s"
FORMATO_FECHA = "%Y-%m-%d %H:%M:%S"
ARCHIVO_LOG = "arboricidad.log"


def _nivel(nombre: Optional[str], defecto: int) -> int:
    return getattr(logging, str(nombre).upper(), defecto) if nombre else defecto


def _handler_consola(nivel: int, formato: logging.Formatter) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(nivel)
    handler.setFormatter(formato)
    return handler


def _handler_archivo(seccion, formato: logging.Formatter) -> logging.Handler:
    os.makedirs(seccion.ruta_logs, exist_ok=True)
    handler = RotatingFileHandler(
        filename=os.path.join(seccion.ruta_logs, ARCHIVO_LOG),
        maxBytes=int(seccion.max_mb_log) * 1024 * 1024,
        backupCount=int(seccion.archivos_a_conservar),
        encoding="utf-8",
    )
    handler.setLevel(_nivel(getattr(seccion, "nivel_archivo", None), logging.DEBUG))
    handler.setFormatter(formato)
    return handler


def configurar_logging_global(config_obj=None, nivel_consola: Optional[str] = None) -> None:
    """
    Reemplaza los handlers del logger raíz según la sección `logging`.

    Args:
        config_obj: Configuración a usar; por defecto el singleton.
        nivel_consola: Sustituye al nivel configurado (la CLI lo usa con -v).
    """
    try:
        if config_obj is None:
            from config import config as obtener_config

            config_obj = obtener_config()
        seccion = config_obj.logging

        raiz = logging.getLogger()
        raiz.setLevel(logging.DEBUG)
        raiz.handlers.clear()

        formato = logging.Formatter(FORMATO, datefmt=FORMATO_FECHA)
        nombre_nivel = nivel_consola or getattr(seccion, "nivel_consola", "WARNING")
        raiz.addHandler(_handler_consola(_nivel(nombre_nivel, logging.WARNING), formato))
        if getattr(seccion, "archivo_habilitado", False):
            raiz.addHandler(_handler_archivo(seccion, formato))
            logging.getLogger(__name__).debug(
                f"Archivo de log en {os.path.abspath(seccion.ruta_logs)}"
            )
        logging.getLogger(__name__).debug(f"Logging configurado; consola en {nombre_nivel}")
    except Exception as e:
        logging.basicConfig(level=logging.WARNING, format=FORMATO, stream=sys.stderr)
        logging.getLogger(__name__).warning(
            f"No se pudo configurar logging desde configuración: {e}"
        )


def obtener_logger(nombre_modulo: str) -> logging.Logger:
    """Logger del módulo; configura el raíz la primera vez que hace falta."""
    if not logging.getLogger().handlers:
        configurar_logging_global()
    return logging.getLogger(nombre_modulo)
