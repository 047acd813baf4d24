# core/gestor_reportes.py

import csv
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

from utils.logger import obtener_logger
from utils.excepciones import ErrorGuardadoReporte


class GestorReportes:
    """
    Escribe los resultados de sondeos y construcciones en disco.

    Formatos:
    - JSON: reporte completo, claves ordenadas (salida determinista).
    - CSV: una fila por contraejemplo.
    - JSONL: un registro por línea (hallazgos de construcciones).

    Los directorios padre se crean si no existen.
    """

    COLUMNAS_CSV = ["check", "k", "graph6", "expected", "observed", "mode"]

    def __init__(self):
        self.logger = obtener_logger(__name__)
        self._archivos_guardados = 0
        self._bytes_guardados = 0

    def _preparar_ruta(self, ruta: Union[str, Path]) -> Path:
        destino = Path(ruta)
        try:
            destino.parent.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ErrorGuardadoReporte(f"No se pudo crear el directorio de {destino}", causa=e)
        return destino

    def _registrar(self, destino: Path) -> None:
        tamano = destino.stat().st_size
        self._archivos_guardados += 1
        self._bytes_guardados += tamano
        self.logger.debug(f"Reporte guardado: {destino} ({tamano / 1024:.1f} KB)")

    def guardar_json(self, datos: Dict[str, Any], ruta: Union[str, Path]) -> Path:
        """
        Guarda un diccionario como JSON legible con claves ordenadas.

        Raises:
            ErrorGuardadoReporte: Si no se puede escribir el archivo.
        """
        destino = self._preparar_ruta(ruta)
        try:
            with open(destino, "w", encoding="utf-8") as f:
                json.dump(datos, f, ensure_ascii=False, indent=2, sort_keys=True)
                f.write("\n")
        except (OSError, TypeError) as e:
            raise ErrorGuardadoReporte(f"Error al guardar JSON en {destino}", causa=e)
        self._registrar(destino)
        return destino

    def guardar_csv(self, contraejemplos: Iterable[Dict[str, Any]], ruta: Union[str, Path]) -> Path:
        """Una fila por contraejemplo; los valores compuestos se serializan como JSON."""
        destino = self._preparar_ruta(ruta)
        try:
            with open(destino, "w", encoding="utf-8", newline="") as f:
                escritor = csv.DictWriter(f, fieldnames=self.COLUMNAS_CSV, extrasaction="ignore")
                escritor.writeheader()
                for fila in contraejemplos:
                    escritor.writerow({c: self._celda(fila.get(c)) for c in self.COLUMNAS_CSV})
        except OSError as e:
            raise ErrorGuardadoReporte(f"Error al guardar CSV en {destino}", causa=e)
        self._registrar(destino)
        return destino

    def guardar_jsonl(self, registros: Iterable[Dict[str, Any]], ruta: Union[str, Path]) -> Path:
        destino = self._preparar_ruta(ruta)
        try:
            with open(destino, "w", encoding="utf-8") as f:
                for registro in registros:
                    f.write(json.dumps(registro, ensure_ascii=False, sort_keys=True))
                    f.write("\n")
        except (OSError, TypeError) as e:
            raise ErrorGuardadoReporte(f"Error al guardar JSONL en {destino}", causa=e)
        self._registrar(destino)
        return destino

    def guardar_reporte(
        self,
        datos: Dict[str, Any],
        ruta: Union[str, Path],
        contraejemplos: Optional[List[Dict[str, Any]]] = None,
    ) -> Path:
        """Elige el formato por la extensión: .csv, .jsonl o JSON en otro caso."""
        sufijo = Path(ruta).suffix.lower()
        if sufijo == ".csv":
            return self.guardar_csv(
                contraejemplos if contraejemplos is not None else datos.get("counterexamples", []),
                ruta,
            )
        if sufijo == ".jsonl":
            return self.guardar_jsonl(
                contraejemplos if contraejemplos is not None else datos.get("counterexamples", []),
                ruta,
            )
        return self.guardar_json(datos, ruta)

    @staticmethod
    def _celda(valor: Any) -> Any:
        if isinstance(valor, (dict, list)):
            return json.dumps(valor, sort_keys=True)
        return "" if valor is None else valor

    def obtener_estadisticas(self) -> Dict[str, int]:
        return {
            "archivos_guardados": self._archivos_guardados,
            "bytes_guardados": self._bytes_guardados,
        }
