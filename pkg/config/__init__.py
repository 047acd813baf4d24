# config/__init__.py
"""
Configuración de la biblioteca de arboricidad equitativa.

Un único objeto `Configuracion` por proceso, leído de YAML y recorrido con
notación de puntos: `config().oraculo.limite_nodos`.
"""

import logging
import os
from typing import Any, Dict, Iterable, Optional, Tuple

import yaml

from utils.excepciones import ErrorConfiguracion

RUTAS_POR_DEFECTO = (
    "./config/config.yaml",
    "./config.yaml",
    os.path.join(os.path.dirname(__file__), "config.yaml"),
)

logger = logging.getLogger(__name__)

SECCIONES_REQUERIDAS = ("grafo", "oraculo", "experimentos", "logging")

# (sección, clave) que deben ser enteros no negativos
CLAVES_ENTERAS: Tuple[Tuple[str, str], ...] = (
    ("grafo", "max_vertices"),
    ("grafo", "max_orden_enumeracion"),
    ("oraculo", "limite_nodos"),
    ("experimentos", "trabajos"),
    ("experimentos", "tamano_lote"),
    ("experimentos", "semilla"),
)


class SeccionConfig:
    """Sección del YAML con sus claves como atributos; las subsecciones se anidan."""

    def __init__(self, datos: Dict[str, Any]):
        for clave, valor in datos.items():
            setattr(self, clave, self._envolver(valor))

    @classmethod
    def _envolver(cls, valor: Any) -> Any:
        if isinstance(valor, dict):
            return cls(valor)
        if isinstance(valor, list):
            return [cls._envolver(v) for v in valor]
        return valor

    def obtener(self, ruta: str, defecto: Any = None) -> Any:
        """Valor en `ruta` ('a.b.c') o `defecto` si falta algún tramo."""
        actual: Any = self
        for tramo in ruta.split("."):
            if not isinstance(actual, SeccionConfig) or not hasattr(actual, tramo):
                return defecto
            actual = getattr(actual, tramo)
        return actual

    def __repr__(self) -> str:
        return f"SeccionConfig({self.__dict__})"


def _buscar_archivo(candidatas: Iterable[str]) -> str:
    for ruta in candidatas:
        if os.path.exists(ruta):
            return ruta
    raise ErrorConfiguracion("No se encontró el archivo de configuración config.yaml")


def validar_configuracion(datos: Any) -> None:
    """
    Comprueba secciones, tipos de las claves numéricas y modos de los chequeos.

    Raises:
        ErrorConfiguracion: Con la primera clave que no cumple.
    """
    if not isinstance(datos, dict):
        raise ErrorConfiguracion("La configuración debe ser un diccionario YAML")
    for seccion in SECCIONES_REQUERIDAS:
        if not isinstance(datos.get(seccion), dict):
            raise ErrorConfiguracion(f"Falta la sección requerida: {seccion}")

    for seccion, clave in CLAVES_ENTERAS:
        valor = datos[seccion].get(clave)
        if not isinstance(valor, int) or isinstance(valor, bool) or valor < 0:
            raise ErrorConfiguracion(f"{seccion}.{clave} debe ser un entero no negativo")

    if datos["grafo"]["max_vertices"] > 64:
        raise ErrorConfiguracion("grafo.max_vertices no puede superar 64")

    modos = datos["experimentos"].get("modos") or {}
    if not isinstance(modos, dict):
        raise ErrorConfiguracion("experimentos.modos debe ser un diccionario")
    for chequeo, ajuste in modos.items():
        if not isinstance(ajuste, dict) or ajuste.get("modo") not in ("assert", "report"):
            raise ErrorConfiguracion(
                f"experimentos.modos.{chequeo}.modo debe ser 'assert' o 'report'"
            )
        if not isinstance(ajuste.get("cotas_afirmadas") or [], list):
            raise ErrorConfiguracion(
                f"experimentos.modos.{chequeo}.cotas_afirmadas debe ser una lista"
            )


class Configuracion:
    """
    Singleton de configuración.

    `Configuracion()` devuelve la instancia cargada (leyendo el archivo por
    defecto la primera vez); `Configuracion(ruta)` carga otro archivo si es
    distinto del actual. Una carga fallida deja intacta la anterior.
    """

    _instancia: Optional["Configuracion"] = None

    def __new__(cls, config_path: Optional[str] = None):
        if cls._instancia is None:
            instancia = super().__new__(cls)
            instancia._cargar(config_path)
            cls._instancia = instancia
        elif config_path is not None and config_path != cls._instancia._ruta:
            cls._instancia._cargar(config_path)
        return cls._instancia

    @classmethod
    def obtener_instancia(cls, config_path: Optional[str] = None) -> "Configuracion":
        return cls(config_path)

    @classmethod
    def restablecer(cls) -> None:
        """Descarta la instancia; la siguiente llamada vuelve a leer el archivo."""
        cls._instancia = None

    def _cargar(self, config_path: Optional[str]) -> None:
        ruta = config_path or _buscar_archivo(RUTAS_POR_DEFECTO)
        try:
            with open(ruta, "r", encoding="utf-8") as f:
                datos = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ErrorConfiguracion(f"YAML inválido en {ruta}", causa=e)
        except OSError as e:
            raise ErrorConfiguracion(f"No se pudo leer {ruta}", causa=e)
        if datos is None:
            raise ErrorConfiguracion(f"El archivo de configuración {ruta} está vacío")

        validar_configuracion(datos)
        self._ruta = ruta
        self._datos = SeccionConfig(datos)
        logger.info(f"Configuración cargada desde {ruta}")

    def __getattr__(self, nombre: str) -> Any:
        # Solo se llama para atributos que no están en la instancia
        datos = self.__dict__.get("_datos")
        if datos is None:
            raise ErrorConfiguracion("Configuración no cargada")
        if hasattr(datos, nombre):
            return getattr(datos, nombre)
        raise AttributeError(f"La configuración no tiene el atributo '{nombre}'")

    def obtener(self, ruta: str, defecto: Any = None) -> Any:
        return self._datos.obtener(ruta, defecto)

    def obtener_ruta_config(self) -> str:
        return self._ruta

    def __repr__(self) -> str:
        return f"Configuracion(archivo='{self._ruta}')"


config = Configuracion.obtener_instancia
