# core/experimentos.py
"""
Arnés de Nordhaus–Gaddum y sondeos exhaustivos o por flujo graph6 sobre
colecciones de grafos, con ejecución paralela y fusión determinista.
"""

import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from core.grafo import (
    CotaGrado,
    Grafo,
    aristas_en_orden_graph6,
    codificar_graph6,
    complemento,
    enumerar_grafos_etiquetados,
    grafo_desde_mascara,
    parsear_graph6,
)
from core.oraculo import OraculoArboricidad
from core.teoremas import (
    predicado_va_igual_1,
    predicado_va_igual_mitad,
    predicado_va_igual_mitad_menos_1,
    rango_va_igual_mitad_menos_1,
    techo_mitad,
)
from utils.excepciones import ErrorLimiteBusqueda, ErrorParametro
from utils.logger import obtener_logger
from config import config

logger = obtener_logger(__name__)

CHEQUEOS = (
    "prop3_1",
    "prop3_2",
    "thm3_3",
    "thm3_4",
    "ng_bounds",
    "ng_extremal",
    "obs1_1",
    "obs1_2",
)


@dataclass
class ResultadoNordhausGaddum:
    n: int
    k: str
    va_grafo: int
    va_complemento: int
    suma: int
    producto: int
    cotas: Dict[str, bool] = field(default_factory=dict)

    @property
    def cumple(self) -> bool:
        return all(self.cotas.values())


def cotas_nordhaus_gaddum(n: int) -> Tuple[int, int]:
    """Cotas superiores (suma, producto): pares n -> 2*ceil(n/2), ceil(n/2)^2; impares n >= 5 -> restadas."""
    mitad = techo_mitad(n)
    if n % 2 == 1 and n >= 5:
        return 2 * mitad - 2, (mitad - 1) ** 2
    return 2 * mitad, mitad**2


def nordhaus_gaddum(g: Grafo, k: CotaGrado, oraculo: Optional[OraculoArboricidad] = None) -> ResultadoNordhausGaddum:
    """va_k^≡ de g y de su complemento, su suma y producto, y cada desigualdad aplicable."""
    if g.n < 2:
        raise ErrorParametro(f"Nordhaus–Gaddum requiere n >= 2, no {g.n}")
    oraculo = oraculo or OraculoArboricidad()
    va_g = oraculo.arboricidad_equitativa_fuerte(g, k)
    va_c = oraculo.arboricidad_equitativa_fuerte(complemento(g), k)
    suma_max, producto_max = cotas_nordhaus_gaddum(g.n)
    return ResultadoNordhausGaddum(
        n=g.n,
        k=str(k),
        va_grafo=va_g,
        va_complemento=va_c,
        suma=va_g + va_c,
        producto=va_g * va_c,
        cotas={
            "sum_lower": va_g + va_c >= 2,
            "sum_upper": va_g + va_c <= suma_max,
            "product_lower": va_g * va_c >= 1,
            "product_upper": va_g * va_c <= producto_max,
        },
    )


def _union_disjunta_p2_k1() -> nx.Graph:
    h = nx.path_graph(2)
    h.add_node(2)
    return h


# (grafo, k mínimo) de la lista de casos extremales de la cota inferior
EXTREMALES_INFERIORES = [
    (nx.path_graph(4), 2),
    (nx.path_graph(3), 2),
    (_union_disjunta_p2_k1(), 2),
    (nx.path_graph(2), 1),
    (nx.empty_graph(2), 1),
]


def caracterizacion_extremal_inferior(g: Grafo, k: CotaGrado) -> bool:
    """True si (g, k) es P_4, P_3 o P_2 ∪ K_1 con k >= 2, o P_2 o 2K_1 con k >= 1 (salvo isomorfismo)."""
    candidatos = [
        h for h, k_min in EXTREMALES_INFERIORES if h.number_of_nodes() == g.n and k.al_menos(k_min)
    ]
    if not candidatos:
        return False
    propio = g.a_networkx()
    return any(nx.is_isomorphic(propio, h) for h in candidatos)


def muestrear_grafos(n: int, cantidad: int, semilla: int) -> List[Grafo]:
    """Grafos etiquetados uniformes (cada arista con probabilidad 1/2)."""
    rng = np.random.default_rng(semilla)
    m = len(aristas_en_orden_graph6(n))
    grafos = []
    for _ in range(cantidad):
        bits = rng.integers(0, 2, size=m)
        mascara = sum(1 << i for i, b in enumerate(bits) if b)
        grafos.append(grafo_desde_mascara(n, mascara))
    return grafos


def subgrafo_generador_aleatorio(g: Grafo, rng: np.random.Generator) -> Grafo:
    """Conserva cada arista de g con probabilidad 1/2."""
    conservar = rng.integers(0, 2, size=g.num_aristas)
    aristas = [a for a, c in zip(g.aristas(), conservar) if c]
    return Grafo.desde_aristas(g.n, aristas)


def grafos_casi_completos(n: int) -> Dict[str, Grafo]:
    """K_n - e, K_n - 2e (aristas disjuntas) y K_n - P_3."""
    if n < 4:
        raise ErrorParametro(f"Se requiere n >= 4, no {n}")
    todas = [(u, v) for u in range(n) for v in range(u + 1, n)]

    def sin(quitar):
        return Grafo.desde_aristas(n, (a for a in todas if a not in quitar))

    return {
        "K_n-e": sin({(0, 1)}),
        "K_n-2e": sin({(0, 1), (2, 3)}),
        "K_n-P3": sin({(0, 1), (1, 2)}),
    }


def verificar_subgrafos_generadores(
    cantidad: int = 500,
    n_max: int = 7,
    semilla: Optional[int] = None,
    ks: Sequence[CotaGrado] = (CotaGrado.finita(1), CotaGrado.finita(2), CotaGrado.ilimitada()),
    oraculo: Optional[OraculoArboricidad] = None,
) -> Dict[str, Any]:
    """Pares aleatorios H ⊆ G generador con n <= n_max; registra cada va_k^≡(H) > va_k^≡(G)."""
    semilla = config().experimentos.semilla if semilla is None else semilla
    oraculo = oraculo or OraculoArboricidad()
    rng = np.random.default_rng(semilla)
    violaciones = []
    for _ in range(cantidad):
        n = int(rng.integers(1, n_max + 1))
        g = muestrear_grafos(n, 1, int(rng.integers(0, 2**31)))[0]
        h = subgrafo_generador_aleatorio(g, rng)
        for k in ks:
            va_h = oraculo.arboricidad_equitativa_fuerte(h, k)
            va_g = oraculo.arboricidad_equitativa_fuerte(g, k)
            if va_h > va_g:
                violaciones.append(
                    {
                        "graph6": codificar_graph6(g).decode("ascii"),
                        "subgraph6": codificar_graph6(h).decode("ascii"),
                        "k": str(k),
                        "va_sub": va_h,
                        "va": va_g,
                    }
                )
    return {"pairs": cantidad, "violations": violaciones}


@dataclass
class ReporteSondeo:
    """Conteos por chequeo y cota, contraejemplos ordenados y tiempos."""

    parametros: Dict[str, Any]
    conteos: Dict[str, Dict[str, Dict[str, int]]] = field(default_factory=dict)
    contraejemplos: List[Dict[str, Any]] = field(default_factory=list)
    tiempos: Dict[str, float] = field(default_factory=dict)

    @property
    def fallos_afirmados(self) -> int:
        return sum(1 for c in self.contraejemplos if c["mode"] == "assert")

    def a_dict(self, incluir_tiempos: bool = False) -> Dict[str, Any]:
        datos = {
            "parameters": self.parametros,
            "counts": self.conteos,
            "counterexamples": self.contraejemplos,
        }
        if incluir_tiempos:
            datos["timing"] = self.tiempos
        return datos


class _EvaluadorGrafo:
    """Calcula perezosamente los valores del oráculo de un grafo para varios chequeos."""

    def __init__(self, g: Grafo, oraculo: OraculoArboricidad, semilla: int):
        self.g = g
        self.oraculo = oraculo
        self.semilla = semilla
        self.g6 = codificar_graph6(g).decode("ascii")
        self._va: Dict[Tuple[str, CotaGrado], int] = {}

    def va(self, k: CotaGrado, cual: str = "g") -> int:
        clave = (cual, k)
        if clave not in self._va:
            grafo = self.g if cual == "g" else complemento(self.g)
            self._va[clave] = self.oraculo.arboricidad_equitativa_fuerte(grafo, k)
        return self._va[clave]

    def evaluar(self, chequeo: str, k: CotaGrado) -> Optional[Tuple[bool, Any, Any]]:
        """(aprobado, esperado, observado), o None si el chequeo no aplica."""
        n = self.g.n
        if n < 1:
            return None
        if not k.al_menos(1) and chequeo not in ("prop3_2", "obs1_1"):
            # Con k = 0 el valor no está acotado por ceil(n/2)
            return None
        mitad = techo_mitad(n)
        if chequeo == "prop3_1":
            valor = self.va(k)
            return 1 <= valor <= mitad, f"1..{mitad}", valor
        if chequeo == "prop3_2":
            predicado = predicado_va_igual_1(self.g, k)
            valor = self.va(k)
            return predicado == (valor == 1), f"predicate={predicado}", valor
        if chequeo == "thm3_3":
            if n < 2:
                return None
            predicado = predicado_va_igual_mitad(self.g)
            valor = self.va(k)
            return predicado == (valor == mitad), f"predicate={predicado}", valor
        if chequeo == "thm3_4":
            if n == 10:
                # n = 3m + 2r con m + r = 3 no tiene solución: se informa quién alcanza ceil(n/2)-1
                valor = self.va(k)
                return valor != mitad - 1, "predicate undefined", valor
            if not rango_va_igual_mitad_menos_1(n):
                return None
            predicado = predicado_va_igual_mitad_menos_1(self.g)
            valor = self.va(k)
            return predicado == (valor == mitad - 1), f"predicate={predicado}", valor
        if chequeo in ("ng_bounds", "ng_extremal"):
            if n < 2:
                return None
            va_g, va_c = self.va(k), self.va(k, "complemento")
            suma, producto = va_g + va_c, va_g * va_c
            if chequeo == "ng_bounds":
                suma_max, producto_max = cotas_nordhaus_gaddum(n)
                aprobado = 2 <= suma <= suma_max and 1 <= producto <= producto_max
                return aprobado, f"sum<={suma_max}, product<={producto_max}", {"sum": suma, "product": producto}
            extremal = caracterizacion_extremal_inferior(self.g, k)
            return extremal == (suma == 2), f"extremal={extremal}", {"sum": suma}
        if chequeo == "obs1_1":
            rng = np.random.default_rng([self.semilla, zlib.crc32(self.g6.encode("ascii"))])
            h = subgrafo_generador_aleatorio(self.g, rng)
            va_h = self.oraculo.arboricidad_equitativa_fuerte(h, k)
            valor = self.va(k)
            return va_h <= valor, f"va(sub)={va_h} <= va", valor
        if chequeo == "obs1_2":
            if not k.al_menos(1):
                return None
            faltantes = [
                q for q in range(mitad, n + 1)
                if self.oraculo.existe_coloracion_equitativa(self.g, q, k) is None
            ]
            return not faltantes, f"feasible q in [{mitad}, {n}]", faltantes
        raise ErrorParametro(f"Chequeo desconocido: '{chequeo}'")


@dataclass(frozen=True)
class _Tarea:
    """Lote de trabajo: un rango de máscaras de orden n, o una lista de graph6."""

    chequeos: Tuple[str, ...]
    cotas: Tuple[str, ...]
    limite_nodos: int
    semilla: int
    orden: Optional[int] = None
    desde: int = 0
    hasta: int = 0
    graph6: Tuple[str, ...] = ()

    def grafos(self) -> Iterator[Grafo]:
        if self.orden is not None:
            for mascara in range(self.desde, self.hasta):
                yield grafo_desde_mascara(self.orden, mascara)
        else:
            for linea in self.graph6:
                yield parsear_graph6(linea)


def _evaluar_tarea(tarea: _Tarea) -> Tuple[int, List[Tuple[str, str, str, str, int, Any, Any]]]:
    """
    Número de grafos del lote y sus resultados (estado, chequeo, cota,
    graph6, orden, esperado, observado); estado es 'pass', 'fail' o 'capped'.
    """
    oraculo = OraculoArboricidad(limite_nodos=tarea.limite_nodos)
    cotas = [CotaGrado.parsear(c) for c in tarea.cotas]
    salida = []
    contados = 0
    for g in tarea.grafos():
        contados += 1
        evaluador = _EvaluadorGrafo(g, oraculo, tarea.semilla)
        for chequeo in tarea.chequeos:
            for k in cotas:
                try:
                    resultado = evaluador.evaluar(chequeo, k)
                except ErrorLimiteBusqueda:
                    salida.append(("capped", chequeo, str(k), evaluador.g6, g.n, None, None))
                    continue
                if resultado is None:
                    continue
                aprobado, esperado, observado = resultado
                salida.append(
                    ("pass" if aprobado else "fail", chequeo, str(k), evaluador.g6, g.n, esperado, observado)
                )
    return contados, salida


def _mapear(funcion: Callable, tareas: Iterable, trabajos: int) -> Iterator:
    if trabajos <= 1:
        return map(funcion, tareas)
    with ProcessPoolExecutor(max_workers=trabajos) as ejecutor:
        return iter(list(ejecutor.map(funcion, tareas)))


def modo_de(
    chequeo: str, k: CotaGrado, forzar: Optional[str] = None, n: Optional[int] = None
) -> str:
    """
    'assert' o 'report' según experimentos.modos; forzar='report' lo impone a todos.

    Con `n` dado, thm3_4 fuera del rango donde su predicado está definido
    (n < 9 o n = 10) queda siempre en 'report'.
    """
    if forzar == "report":
        return "report"
    if chequeo == "thm3_4" and n is not None and not rango_va_igual_mitad_menos_1(n):
        return "report"
    ajuste = config().obtener(f"experimentos.modos.{chequeo}")
    if ajuste is None:
        return "assert"
    if ajuste.modo == "report":
        return "report"
    afirmadas = [str(c) for c in (ajuste.cotas_afirmadas or [])]
    if afirmadas and str(k) not in afirmadas:
        return "report"
    return "assert"


def _tareas(
    orden: Optional[int],
    grafos: Optional[Iterable[Grafo]],
    base: Dict[str, Any],
    tamano_lote: int,
) -> Iterator[_Tarea]:
    if orden is not None:
        # Valida el orden contra el límite antes de repartir máscaras
        next(enumerar_grafos_etiquetados(orden))
        total = 1 << len(aristas_en_orden_graph6(orden))
        for desde in range(0, total, tamano_lote):
            yield _Tarea(orden=orden, desde=desde, hasta=min(total, desde + tamano_lote), **base)
    else:
        iterador = iter(grafos)
        while True:
            lote = tuple(codificar_graph6(g).decode("ascii") for g in islice(iterador, tamano_lote))
            if not lote:
                break
            yield _Tarea(graph6=lote, **base)


def sondear(
    orden: Optional[int] = None,
    grafos: Optional[Iterable[Grafo]] = None,
    ks: Sequence[CotaGrado] = (CotaGrado.ilimitada(),),
    chequeos: Sequence[str] = CHEQUEOS,
    trabajos: Optional[int] = None,
    modo: Optional[str] = None,
    config_obj=None,
) -> ReporteSondeo:
    """
    Ejecuta cada chequeo sobre cada grafo (todos los etiquetados de un orden,
    o una colección/flujo) y cada cota; agrega conteos y contraejemplos.
    La salida está ordenada por chequeo, cota y graph6, independiente de `trabajos`.
    """
    if (orden is None) == (grafos is None):
        raise ErrorParametro("Indique exactamente una fuente: orden o grafos")
    desconocidos = [c for c in chequeos if c not in CHEQUEOS]
    if desconocidos:
        raise ErrorParametro(f"Chequeos desconocidos: {desconocidos}")
    cfg = config_obj or config()
    trabajos = cfg.experimentos.trabajos if trabajos is None else trabajos
    ks = sorted(set(ks), key=CotaGrado.clave_orden)
    chequeos = [c for c in CHEQUEOS if c in set(chequeos)]

    base = {
        "chequeos": tuple(chequeos),
        "cotas": tuple(str(k) for k in ks),
        "limite_nodos": cfg.oraculo.limite_nodos,
        "semilla": cfg.experimentos.semilla,
    }
    reporte = ReporteSondeo(
        parametros={
            "source": f"order {orden}" if orden is not None else "graph6",
            "k": [str(k) for k in ks],
            "checks": chequeos,
        }
    )
    for chequeo in chequeos:
        reporte.conteos[chequeo] = {
            str(k): {"examined": 0, "passed": 0, "capped": 0} for k in ks
        }
    modos = {(c, str(k)): modo_de(c, k, modo) for c in chequeos for k in ks}
    logger.info(
        f"Sondeo iniciado: {reporte.parametros['source']}, k={reporte.parametros['k']}, "
        f"{len(chequeos)} chequeos, {trabajos} proceso(s)"
    )

    inicio = time.perf_counter()
    total_grafos = 0
    tareas = _tareas(orden, grafos, base, cfg.experimentos.tamano_lote)
    for contados, resultados in _mapear(_evaluar_tarea, tareas, trabajos):
        total_grafos += contados
        for estado, chequeo, k, g6, n, esperado, observado in resultados:
            contador = reporte.conteos[chequeo][k]
            if estado == "capped":
                contador["capped"] += 1
                continue
            contador["examined"] += 1
            if estado == "pass":
                contador["passed"] += 1
            else:
                reporte.contraejemplos.append(
                    {
                        "check": chequeo,
                        "k": k,
                        "graph6": g6,
                        "expected": esperado,
                        "observed": observado,
                        "mode": (
                            modos[(chequeo, k)]
                            if chequeo != "thm3_4"
                            else modo_de(chequeo, CotaGrado.parsear(k), modo, n)
                        ),
                    }
                )

    orden_k = {str(k): i for i, k in enumerate(ks)}
    orden_c = {c: i for i, c in enumerate(chequeos)}
    reporte.contraejemplos.sort(key=lambda c: (orden_c[c["check"]], orden_k[c["k"]], c["graph6"]))
    reporte.parametros["graphs"] = total_grafos
    reporte.tiempos["total_s"] = round(time.perf_counter() - inicio, 3)
    reporte.tiempos["jobs"] = trabajos

    for c in reporte.contraejemplos:
        if c["mode"] == "assert":
            logger.warning(f"Contraejemplo {c['check']} k={c['k']}: {c['graph6']}")
    logger.info(
        f"Sondeo terminado: {reporte.parametros['graphs']} grafos, "
        f"{len(reporte.contraejemplos)} contraejemplos ({reporte.fallos_afirmados} afirmados)"
    )
    return reporte


def barrido_nordhaus_gaddum(
    orden: Optional[int] = None,
    grafos: Optional[Iterable[Grafo]] = None,
    ks: Sequence[CotaGrado] = (CotaGrado.finita(1),),
    trabajos: Optional[int] = None,
    config_obj=None,
) -> Dict[str, Any]:
    """
    Por cada cota: extremos de suma y producto de va_k^≡(G) + va_k^≡(Ḡ),
    grafos que alcanzan la suma máxima y violaciones de las cotas.
    """
    if (orden is None) == (grafos is None):
        raise ErrorParametro("Indique exactamente una fuente: orden o grafos")
    cfg = config_obj or config()
    trabajos = cfg.experimentos.trabajos if trabajos is None else trabajos
    ks = sorted(set(ks), key=CotaGrado.clave_orden)
    base = {
        "chequeos": ("ng_bounds",),
        "cotas": tuple(str(k) for k in ks),
        "limite_nodos": cfg.oraculo.limite_nodos,
        "semilla": cfg.experimentos.semilla,
    }
    filas: Dict[str, Dict[str, Any]] = {
        str(k): {
            "k": str(k),
            "graphs": 0,
            "max_sum": None,
            "max_sum_graphs": [],
            "min_sum": None,
            "max_product": None,
            "min_product": None,
            "violations": [],
            "capped": 0,
        }
        for k in ks
    }
    tareas = _tareas(orden, grafos, base, cfg.experimentos.tamano_lote)
    for _, resultados in _mapear(_evaluar_tarea, tareas, trabajos):
        for estado, _, k, g6, _, _, observado in resultados:
            fila = filas[k]
            if estado == "capped":
                fila["capped"] += 1
                continue
            fila["graphs"] += 1
            suma, producto = observado["sum"], observado["product"]
            if fila["max_sum"] is None or suma > fila["max_sum"]:
                fila["max_sum"], fila["max_sum_graphs"] = suma, [g6]
            elif suma == fila["max_sum"]:
                fila["max_sum_graphs"].append(g6)
            fila["min_sum"] = suma if fila["min_sum"] is None else min(fila["min_sum"], suma)
            fila["max_product"] = producto if fila["max_product"] is None else max(fila["max_product"], producto)
            fila["min_product"] = producto if fila["min_product"] is None else min(fila["min_product"], producto)
            if estado == "fail":
                fila["violations"].append(g6)
    for fila in filas.values():
        fila["max_sum_graphs"].sort()
        fila["violations"].sort()
    return {
        "source": f"order {orden}" if orden is not None else "graph6",
        "rows": [filas[str(k)] for k in ks],
    }
