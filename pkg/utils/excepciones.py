# utils/excepciones.py
"""
Excepciones personalizadas para la biblioteca de arboricidad equitativa.
Proporciona una jerarquía de excepciones para un manejo de errores más específico.
"""

from typing import Any, Dict, Optional


class ErrorArboricidad(Exception):
    """Excepción base para todos los errores de la aplicación."""

    def __init__(self, mensaje: str, causa: Exception = None):
        super().__init__(mensaje)
        self.mensaje = mensaje
        self.causa = causa

    def __str__(self) -> str:
        if self.causa:
            return f"{self.mensaje} (Causa: {type(self.causa).__name__}: {str(self.causa)})"
        return self.mensaje


class ErrorConfiguracion(ErrorArboricidad):
    """Error relacionado con la configuración de la aplicación."""

    pass


class ErrorGrafo(ErrorArboricidad):
    """Índice de vértice fuera de rango o grafo mayor que el límite."""

    pass


class ErrorParametro(ErrorArboricidad):
    """Un parámetro numérico no cumple la precondición de la operación."""

    pass


class ErrorGraph6(ErrorArboricidad):
    """Entrada graph6 mal formada."""

    def __init__(
        self,
        mensaje: str,
        desplazamiento: Optional[int] = None,
        linea: Optional[int] = None,
        causa: Exception = None,
    ):
        """
        Inicializa la excepción.

        Args:
            mensaje: Mensaje de error.
            desplazamiento: Byte (base 0) donde se detectó el problema.
            linea: Línea del archivo (base 1), si la entrada viene de un archivo.
        """
        super().__init__(mensaje, causa)
        self.desplazamiento = desplazamiento
        self.linea = linea

    def con_linea(self, linea: int) -> "ErrorGraph6":
        """Devuelve una copia de la excepción anotada con el número de línea."""
        return ErrorGraph6(self.mensaje, self.desplazamiento, linea, self.causa)

    def __str__(self):
        base = super().__str__()
        detalles = []
        if self.linea is not None:
            detalles.append(f"línea {self.linea}")
        if self.desplazamiento is not None:
            detalles.append(f"byte {self.desplazamiento}")
        if detalles:
            return f"{base} ({', '.join(detalles)})"
        return base


class ErrorCapacidadExcedida(ErrorArboricidad):
    """El orden pedido supera el límite de enumeración."""

    pass


class ErrorLimiteBusqueda(ErrorArboricidad):
    """La búsqueda exhaustiva superó el límite de nodos; no implica infactibilidad."""

    def __init__(self, mensaje: str, nodos: int = 0):
        super().__init__(mensaje)
        self.nodos = nodos


class ErrorColoracion(ErrorArboricidad):
    """La coloración no corresponde a los vértices del grafo o está mal formada."""

    pass


class ConstruccionNoAplicable(ErrorArboricidad):
    """Una construcción explícita no produjo una coloración válida."""

    def __init__(self, mensaje: str, hallazgo: Optional[Dict[str, Any]] = None):
        super().__init__(mensaje)
        self.hallazgo = hallazgo or {}


class ErrorClaseNoClasificable(ErrorArboricidad):
    """Una clase de color de K_{n,n,n} no encaja en ninguno de los 18 tipos."""

    def __init__(self, mensaje: str, clase: int = None, conteos=None):
        super().__init__(mensaje)
        self.clase = clase
        self.conteos = conteos


class ErrorGuardadoReporte(ErrorArboricidad):
    """No se pudo escribir un reporte en disco."""

    pass
