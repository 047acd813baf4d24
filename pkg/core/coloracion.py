# core/coloracion.py
"""
Particiones en clases de color y validador de la definición de
(t,k)-coloración arbórea equitativa.
"""

import json
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from core.grafo import CotaGrado, Grafo, subgrafo_inducido
from utils.excepciones import ErrorColoracion


@dataclass(frozen=True)
class Coloracion:
    """
    Asignación total vértice -> clase en 1..t.

    asignacion[v] es la clase del vértice v. Se admiten clases vacías; con
    t <= n la coloración resultante nunca es equitativa.
    """

    t: int
    asignacion: Tuple[int, ...]

    def __post_init__(self):
        if self.t < 1:
            raise ErrorColoracion(f"El número de clases debe ser positivo, no {self.t}")
        usadas = set(self.asignacion)
        fuera = [c for c in usadas if not 1 <= c <= self.t]
        if fuera:
            raise ErrorColoracion(f"Clases fuera del rango 1..{self.t}: {sorted(fuera)}")

    @property
    def n(self) -> int:
        return len(self.asignacion)

    @classmethod
    def desde_clases(cls, t: int, clases: Sequence[Sequence[int]], n: Optional[int] = None) -> "Coloracion":
        """
        Construye la coloración a partir de la lista de clases (la clase i+1 es clases[i]).

        Raises:
            ErrorColoracion: Vértices repetidos, ausentes o más clases que t.
        """
        if len(clases) > t:
            raise ErrorColoracion(f"Se dieron {len(clases)} clases para t={t}")
        todos = [v for clase in clases for v in clase]
        if n is None:
            n = len(todos)
        if sorted(todos) != list(range(n)):
            raise ErrorColoracion(
                f"Las clases deben cubrir exactamente los vértices 0..{n - 1} una vez"
            )
        asignacion = [0] * n
        for indice, clase in enumerate(clases, start=1):
            for v in clase:
                asignacion[v] = indice
        return cls(t, tuple(asignacion))

    def clases(self) -> List[List[int]]:
        """Clases 1..t como listas de vértices ordenadas (índice i -> clase i+1)."""
        resultado: List[List[int]] = [[] for _ in range(self.t)]
        for v, c in enumerate(self.asignacion):
            resultado[c - 1].append(v)
        return resultado

    def a_dict(self) -> Dict[str, Any]:
        return {"t": self.t, "classes": self.clases()}

    def a_json(self) -> str:
        return json.dumps(self.a_dict(), sort_keys=True)

    @classmethod
    def desde_dict(cls, datos: Dict[str, Any], n: Optional[int] = None) -> "Coloracion":
        try:
            t = int(datos["t"])
            clases = [[int(v) for v in clase] for clase in datos["classes"]]
        except (KeyError, TypeError, ValueError) as e:
            raise ErrorColoracion("Coloración JSON mal formada", causa=e)
        return cls.desde_clases(t, clases, n)

    @classmethod
    def desde_json(cls, texto: str, n: Optional[int] = None) -> "Coloracion":
        try:
            datos = json.loads(texto)
        except json.JSONDecodeError as e:
            raise ErrorColoracion("Coloración JSON no válida", causa=e)
        if not isinstance(datos, dict):
            raise ErrorColoracion("La coloración JSON debe ser un objeto")
        return cls.desde_dict(datos, n)


@dataclass
class VeredictoClase:
    """Resultado de una clase: tamaño, si induce bosque y el primer fallo encontrado."""

    indice: int
    tamano: int
    es_bosque: bool
    grado_maximo: int
    valida: bool
    ciclo: Optional[List[int]] = None
    vertice_grado_alto: Optional[int] = None


@dataclass
class ReporteValidacion:
    valida: bool
    equitativa: bool
    tamanos: List[int]
    clases: List[VeredictoClase] = field(default_factory=list)

    def a_dict(self) -> Dict[str, Any]:
        return asdict(self)


def tamanos_clases(c: Coloracion) -> List[int]:
    """Tamaños de las clases 1..t en orden de índice; suman n."""
    tamanos = [0] * c.t
    for clase in c.asignacion:
        tamanos[clase - 1] += 1
    return tamanos


def es_equitativa(c: Coloracion) -> bool:
    """max - min de los tamaños (clases vacías incluidas) es a lo sumo 1."""
    tamanos = tamanos_clases(c)
    return max(tamanos) - min(tamanos) <= 1


def _veredicto_clase(g: Grafo, indice: int, vertices: List[int], cota: CotaGrado) -> VeredictoClase:
    sub, mapeo = subgrafo_inducido(g, vertices)
    original = {nuevo: viejo for viejo, nuevo in mapeo.items()}
    grado_max = sub.grado_maximo
    es_bosque = sub.num_aristas == sub.n - sub.num_componentes()

    veredicto = VeredictoClase(
        indice=indice,
        tamano=len(vertices),
        es_bosque=es_bosque,
        grado_maximo=grado_max,
        valida=es_bosque and cota.admite(grado_max),
    )
    if not es_bosque:
        aristas_ciclo = nx.find_cycle(sub.a_networkx())
        veredicto.ciclo = [original[u] for u, _ in aristas_ciclo]
    elif not cota.admite(grado_max):
        veredicto.vertice_grado_alto = next(
            original[v] for v in range(sub.n) if sub.grado(v) == grado_max
        )
    return veredicto


def validar_coloracion_arborea(g: Grafo, c: Coloracion, k: CotaGrado) -> ReporteValidacion:
    """
    Verifica la definición: equitativa y cada clase induce un bosque con Δ <= k.

    Raises:
        ErrorColoracion: Si la coloración no asigna exactamente los vértices de g.
    """
    if c.n != g.n:
        raise ErrorColoracion(
            f"La coloración asigna {c.n} vértices pero el grafo tiene {g.n}"
        )
    equitativa = es_equitativa(c)
    veredictos = [
        _veredicto_clase(g, indice, vertices, k)
        for indice, vertices in enumerate(c.clases(), start=1)
    ]
    return ReporteValidacion(
        valida=equitativa and all(v.valida for v in veredictos),
        equitativa=equitativa,
        tamanos=tamanos_clases(c),
        clases=veredictos,
    )
