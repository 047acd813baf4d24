# core/grafo.py
"""
Representación de grafos simples no dirigidos con adyacencia por bitsets,
familias estándar, complemento, emparejamiento máximo (blossom de Edmonds),
serialización graph6 y enumeración de grafos etiquetados.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

import networkx as nx

from utils.encoding import (
    codificar_n,
    decodificar_n,
    desempaquetar_bits,
    empaquetar_bits,
)
from utils.excepciones import (
    ErrorCapacidadExcedida,
    ErrorGrafo,
    ErrorGraph6,
    ErrorParametro,
)
from utils.logger import obtener_logger
from config import config

logger = obtener_logger(__name__)

CABECERA_GRAPH6 = b">>graph6<<"
LIMITE_VERTICES = 64


def _limite_vertices() -> int:
    try:
        return min(LIMITE_VERTICES, config().grafo.max_vertices)
    except Exception as e:
        logger.debug(f"Sin configuración de grafo, se usa {LIMITE_VERTICES}: {e}")
        return LIMITE_VERTICES


@dataclass(frozen=True)
class CotaGrado:
    """Cota k del grado máximo dentro de cada clase; k=None es ilimitada (k = ∞)."""

    k: Optional[int] = None

    def __post_init__(self):
        if self.k is not None and self.k < 0:
            raise ErrorParametro(f"La cota de grado debe ser >= 0, no {self.k}")

    @classmethod
    def ilimitada(cls) -> "CotaGrado":
        return cls(None)

    @classmethod
    def finita(cls, k: int) -> "CotaGrado":
        return cls(k)

    @classmethod
    def parsear(cls, texto: Union[str, int, "CotaGrado"]) -> "CotaGrado":
        """Acepta 'inf' (o '∞') para la cota ilimitada, o un entero >= 0."""
        if isinstance(texto, CotaGrado):
            return texto
        if isinstance(texto, int):
            return cls(texto)
        limpio = str(texto).strip().lower()
        if limpio in ("inf", "∞", "infinito"):
            return cls(None)
        try:
            return cls(int(limpio))
        except ValueError as e:
            raise ErrorParametro(f"Cota de grado no válida: '{texto}'", causa=e)

    @property
    def es_ilimitada(self) -> bool:
        return self.k is None

    def admite(self, grado: int) -> bool:
        """True si un vértice de ese grado respeta la cota."""
        return self.k is None or grado <= self.k

    def al_menos(self, valor: int) -> bool:
        """True si k >= valor (siempre cierto para la cota ilimitada)."""
        return self.k is None or self.k >= valor

    def clave_orden(self) -> Tuple[int, int]:
        return (1, 0) if self.k is None else (0, self.k)

    def __str__(self) -> str:
        return "inf" if self.k is None else str(self.k)


INFINITO = CotaGrado.ilimitada()


@dataclass(frozen=True)
class Grafo:
    """
    Grafo simple no dirigido sobre los vértices 0..n-1.

    adyacencia[v] es un entero cuyo bit u está encendido si {u, v} es arista.
    Las instancias son inmutables; los constructores garantizan simetría y
    ausencia de lazos.
    """

    n: int
    adyacencia: Tuple[int, ...]

    @classmethod
    def desde_aristas(cls, n: int, aristas: Iterable[Tuple[int, int]]) -> "Grafo":
        """
        Construye un grafo a partir de una lista de aristas.

        Raises:
            ErrorGrafo: Vértice fuera de rango, lazo o n mayor que el límite.
        """
        if n < 0 or n > _limite_vertices():
            raise ErrorGrafo(f"Orden fuera del rango 0..{_limite_vertices()}: {n}")
        adyacencia = [0] * n
        for u, v in aristas:
            if not (0 <= u < n and 0 <= v < n):
                raise ErrorGrafo(f"Arista ({u}, {v}) fuera del rango 0..{n - 1}")
            if u == v:
                raise ErrorGrafo(f"Lazo en el vértice {u}")
            adyacencia[u] |= 1 << v
            adyacencia[v] |= 1 << u
        return cls(n, tuple(adyacencia))

    @classmethod
    def vacio(cls, n: int) -> "Grafo":
        return cls.desde_aristas(n, ())

    def tiene_arista(self, u: int, v: int) -> bool:
        return bool(self.adyacencia[u] >> v & 1)

    def vecinos(self, v: int) -> List[int]:
        return vertices_de(self.adyacencia[v])

    def grado(self, v: int) -> int:
        return bin(self.adyacencia[v]).count("1")

    @property
    def grado_maximo(self) -> int:
        return max((self.grado(v) for v in range(self.n)), default=0)

    @property
    def num_aristas(self) -> int:
        return sum(self.grado(v) for v in range(self.n)) // 2

    def aristas(self) -> List[Tuple[int, int]]:
        """Aristas (u, v) con u < v en orden lexicográfico."""
        return [
            (u, v)
            for u in range(self.n)
            for v in vertices_de(self.adyacencia[u] >> (u + 1) << (u + 1))
        ]

    def num_componentes(self) -> int:
        return len(componentes_conexas(self))

    def a_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.aristas())
        return g

    def __repr__(self) -> str:
        return f"Grafo(n={self.n}, aristas={self.aristas()})"


@dataclass(frozen=True)
class Emparejamiento:
    """Conjunto de aristas disjuntas en vértices del grafo anfitrión."""

    aristas: FrozenSet[Tuple[int, int]]

    @property
    def tamano(self) -> int:
        return len(self.aristas)

    def __len__(self) -> int:
        return len(self.aristas)


def vertices_de(mascara: int) -> List[int]:
    """Índices de los bits encendidos de una máscara, en orden creciente."""
    vertices = []
    while mascara:
        bajo = mascara & -mascara
        vertices.append(bajo.bit_length() - 1)
        mascara ^= bajo
    return vertices


def contar_bits(mascara: int) -> int:
    return bin(mascara).count("1")


def componente_de(adyacencia: Tuple[int, ...], v: int, dentro: int) -> int:
    """Máscara de la componente de v en el subgrafo inducido por la máscara `dentro`."""
    visitados = 1 << v
    frontera = visitados
    while frontera:
        siguiente = 0
        for u in vertices_de(frontera):
            siguiente |= adyacencia[u] & dentro
        frontera = siguiente & ~visitados
        visitados |= frontera
    return visitados


def componentes_conexas(g: Grafo) -> List[int]:
    """Componentes conexas como máscaras, ordenadas por su vértice mínimo."""
    restantes = (1 << g.n) - 1
    componentes = []
    while restantes:
        v = (restantes & -restantes).bit_length() - 1
        comp = componente_de(g.adyacencia, v, restantes)
        componentes.append(comp)
        restantes &= ~comp
    return componentes


def complemento(g: Grafo) -> Grafo:
    """Grafo con las mismas n vértices y exactamente las no aristas de g."""
    total = (1 << g.n) - 1
    return Grafo(
        g.n, tuple(total & ~g.adyacencia[v] & ~(1 << v) for v in range(g.n))
    )


def subgrafo_inducido(g: Grafo, s: Iterable[int]) -> Tuple[Grafo, Dict[int, int]]:
    """
    Subgrafo inducido por s, renumerado de forma estable.

    Returns:
        Tupla (subgrafo, mapeo índice original -> índice nuevo).

    Raises:
        ErrorGrafo: Si algún vértice de s está fuera de 0..n-1.
    """
    vertices = sorted(set(s))
    for v in vertices:
        if not 0 <= v < g.n:
            raise ErrorGrafo(f"Vértice {v} fuera del rango 0..{g.n - 1}")
    mapeo = {viejo: nuevo for nuevo, viejo in enumerate(vertices)}
    adyacencia = []
    for viejo in vertices:
        fila = 0
        for u in vertices_de(g.adyacencia[viejo]):
            if u in mapeo:
                fila |= 1 << mapeo[u]
        adyacencia.append(fila)
    return Grafo(len(vertices), tuple(adyacencia)), mapeo


def es_bosque_con_grado_maximo(g: Grafo, cota: CotaGrado) -> bool:
    """True si g es acíclico y, salvo cota ilimitada, Δ(g) <= k."""
    if not cota.es_ilimitada and g.grado_maximo > cota.k:
        return False
    return g.num_aristas == g.n - g.num_componentes()


def contiene_p4(g: Grafo) -> bool:
    """True si g contiene un camino de 4 vértices como subgrafo (no necesariamente inducido)."""
    for b, c in g.aristas():
        extremos_b = g.adyacencia[b] & ~(1 << c)
        extremos_c = g.adyacencia[c] & ~(1 << b)
        if not extremos_b or not extremos_c:
            continue
        # a != d salvo que ambos lados tengan como única opción el mismo vértice
        if extremos_b == extremos_c and contar_bits(extremos_b) == 1:
            continue
        return True
    return False


class _BuscadorBlossom:
    """Búsqueda de caminos aumentantes con contracción de flores (Edmonds)."""

    def __init__(self, g: Grafo):
        self.g = g
        self.n = g.n
        self.pareja = [-1] * g.n

    def _ancestro_comun(self, a: int, b: int) -> int:
        marcados = [False] * self.n
        while True:
            a = self.base[a]
            marcados[a] = True
            if self.pareja[a] == -1:
                break
            a = self.padre[self.pareja[a]]
        while True:
            b = self.base[b]
            if marcados[b]:
                return b
            b = self.padre[self.pareja[b]]

    def _marcar_camino(self, v: int, b: int, hijo: int) -> None:
        while self.base[v] != b:
            self.en_flor[self.base[v]] = True
            self.en_flor[self.base[self.pareja[v]]] = True
            self.padre[v] = hijo
            hijo = self.pareja[v]
            v = self.padre[self.pareja[v]]

    def _buscar_camino(self, raiz: int) -> int:
        self.usados = [False] * self.n
        self.padre = [-1] * self.n
        self.base = list(range(self.n))
        self.usados[raiz] = True
        cola = deque([raiz])
        while cola:
            v = cola.popleft()
            for destino in vertices_de(self.g.adyacencia[v]):
                if self.base[v] == self.base[destino] or self.pareja[v] == destino:
                    continue
                if destino == raiz or (
                    self.pareja[destino] != -1
                    and self.padre[self.pareja[destino]] != -1
                ):
                    base_nueva = self._ancestro_comun(v, destino)
                    self.en_flor = [False] * self.n
                    self._marcar_camino(v, base_nueva, destino)
                    self._marcar_camino(destino, base_nueva, v)
                    for i in range(self.n):
                        if self.en_flor[self.base[i]]:
                            self.base[i] = base_nueva
                            if not self.usados[i]:
                                self.usados[i] = True
                                cola.append(i)
                elif self.padre[destino] == -1:
                    self.padre[destino] = v
                    if self.pareja[destino] == -1:
                        return destino
                    siguiente = self.pareja[destino]
                    self.usados[siguiente] = True
                    cola.append(siguiente)
        return -1

    def resolver(self) -> List[int]:
        # Emparejamiento voraz inicial
        for v in range(self.n):
            if self.pareja[v] == -1:
                for u in vertices_de(self.g.adyacencia[v]):
                    if self.pareja[u] == -1:
                        self.pareja[u] = v
                        self.pareja[v] = u
                        break

        for raiz in range(self.n):
            if self.pareja[raiz] != -1:
                continue
            v = self._buscar_camino(raiz)
            while v != -1:
                pv = self.padre[v]
                ppv = self.pareja[pv]
                self.pareja[v] = pv
                self.pareja[pv] = v
                v = ppv
        return self.pareja


def emparejamiento_maximo(g: Grafo) -> Emparejamiento:
    """Emparejamiento de cardinalidad máxima en un grafo general."""
    pareja = _BuscadorBlossom(g).resolver()
    return Emparejamiento(
        frozenset((v, u) for v, u in enumerate(pareja) if u != -1 and v < u)
    )


def _completo(n: int) -> Grafo:
    return Grafo.desde_aristas(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def _multipartito(*partes: int) -> Grafo:
    inicios = [sum(partes[:i]) for i in range(len(partes))]
    aristas = []
    for i, (a, tam_a) in enumerate(zip(inicios, partes)):
        for b, tam_b in zip(inicios[i + 1 :], partes[i + 1 :]):
            aristas.extend((u, v) for u in range(a, a + tam_a) for v in range(b, b + tam_b))
    return Grafo.desde_aristas(sum(partes), aristas)


def _rueda(n: int) -> Grafo:
    borde = list(range(1, n))
    aristas = [(0, v) for v in borde]
    aristas += [(borde[i], borde[(i + 1) % len(borde)]) for i in range(len(borde))]
    return Grafo.desde_aristas(n, aristas)


def _estrella(n: int) -> Grafo:
    return Grafo.desde_aristas(n, ((0, v) for v in range(1, n)))


def _camino(n: int) -> Grafo:
    return Grafo.desde_aristas(n, ((v, v + 1) for v in range(n - 1)))


def _ciclo(n: int) -> Grafo:
    return Grafo.desde_aristas(n, ((v, (v + 1) % n) for v in range(n)))


# nombre -> (constructor, número de parámetros, mínimo de cada parámetro)
FAMILIAS = {
    "completo": (_completo, 1, 0),
    "bipartito_completo": (_multipartito, 2, 0),
    "tripartito_completo": (_multipartito, 3, 0),
    "rueda": (_rueda, 1, 4),
    "estrella": (_estrella, 1, 1),
    "camino": (_camino, 1, 0),
    "ciclo": (_ciclo, 1, 3),
    "vacio": (Grafo.vacio, 1, 0),
}


def construir_familia(familia: str, *parametros: int) -> Grafo:
    """
    Instancia etiquetada canónica de una familia estándar.

    - rueda(n): vértice 0 es el centro, unido a un ciclo 1..n-1 (orden n).
    - estrella(n): K_{1,n-1} con centro 0.
    - multipartitos: la parte i ocupa índices consecutivos, en el orden dado.

    Raises:
        ErrorParametro: Familia desconocida, aridad incorrecta o parámetro bajo el mínimo.
    """
    if familia not in FAMILIAS:
        raise ErrorParametro(
            f"Familia desconocida: '{familia}'. Opciones: {', '.join(sorted(FAMILIAS))}"
        )
    constructor, aridad, minimo = FAMILIAS[familia]
    if len(parametros) != aridad:
        raise ErrorParametro(
            f"La familia '{familia}' requiere {aridad} parámetro(s), recibió {len(parametros)}"
        )
    for p in parametros:
        if p < minimo:
            raise ErrorParametro(
                f"Parámetro {p} por debajo del mínimo {minimo} de la familia '{familia}'"
            )
    return constructor(*parametros)


def aristas_en_orden_graph6(n: int) -> List[Tuple[int, int]]:
    """Pares (i, j), i < j, en el orden por columnas del triángulo superior de graph6."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def codificar_graph6(g: Grafo) -> bytes:
    """Codificación graph6 canónica (sin cabecera ni salto de línea)."""
    bits = (g.adyacencia[j] >> i & 1 for i, j in aristas_en_orden_graph6(g.n))
    return codificar_n(g.n) + empaquetar_bits(bits)


def _a_bytes(texto: Union[bytes, str]) -> bytes:
    # Caracteres fuera de latin-1 pasan a 0x00 para que el error señale su posición
    if isinstance(texto, str):
        return bytes(ord(c) if ord(c) < 256 else 0 for c in texto)
    return bytes(texto)


def parsear_graph6(texto: Union[bytes, str]) -> Grafo:
    """
    Decodifica una línea graph6. Acepta y descarta la cabecera '>>graph6<<'
    y el salto de línea final.

    Raises:
        ErrorGraph6: Cabecera de longitud mal formada, byte no imprimible o
            bytes sobrantes, con el desplazamiento del byte culpable.
    """
    datos = _a_bytes(texto).rstrip(b"\r\n")
    inicio = len(CABECERA_GRAPH6) if datos.startswith(CABECERA_GRAPH6) else 0

    n, posicion = decodificar_n(datos, inicio)
    if n > _limite_vertices():
        raise ErrorGraph6(
            f"El grafo tiene {n} vértices; el límite es {_limite_vertices()}",
            desplazamiento=inicio,
        )
    pares = aristas_en_orden_graph6(n)
    bits = desempaquetar_bits(datos, posicion, len(pares))
    adyacencia = [0] * n
    for (i, j), bit in zip(pares, bits):
        if bit:
            adyacencia[i] |= 1 << j
            adyacencia[j] |= 1 << i
    return Grafo(n, tuple(adyacencia))


def leer_graph6(lineas: Iterable[Union[bytes, str]]) -> Iterator[Grafo]:
    """
    Un grafo por línea; ignora líneas vacías. Los errores llevan el número de línea.
    """
    for numero, linea in enumerate(lineas, start=1):
        crudo = _a_bytes(linea)
        if not crudo.strip():
            continue
        try:
            yield parsear_graph6(crudo)
        except ErrorGraph6 as e:
            raise e.con_linea(numero) from e


def grafo_desde_mascara(n: int, mascara: int) -> Grafo:
    """Grafo cuyo bit i de la máscara activa la i-ésima arista en orden graph6."""
    adyacencia = [0] * n
    for indice, (i, j) in enumerate(aristas_en_orden_graph6(n)):
        if mascara >> indice & 1:
            adyacencia[i] |= 1 << j
            adyacencia[j] |= 1 << i
    return Grafo(n, tuple(adyacencia))


def enumerar_grafos_etiquetados(n: int) -> Iterator[Grafo]:
    """
    Todos los 2^(n(n-1)/2) grafos etiquetados de orden n, uno por máscara de
    aristas en orden creciente.

    Raises:
        ErrorCapacidadExcedida: Si n supera grafo.max_orden_enumeracion.
    """
    limite = config().grafo.max_orden_enumeracion
    if n < 0:
        raise ErrorParametro(f"Orden negativo: {n}")
    if n > limite:
        raise ErrorCapacidadExcedida(
            f"No se enumeran grafos de orden {n}; el límite es {limite}"
        )
    pares = aristas_en_orden_graph6(n)
    logger.debug(f"Enumerando {2 ** len(pares)} grafos etiquetados de orden {n}")
    for mascara in range(1 << len(pares)):
        adyacencia = [0] * n
        indice = 0
        resto = mascara
        while resto:
            if resto & 1:
                i, j = pares[indice]
                adyacencia[i] |= 1 << j
                adyacencia[j] |= 1 << i
            resto >>= 1
            indice += 1
        yield Grafo(n, tuple(adyacencia))
