# core/oraculo.py
"""
Procedimiento de decisión exhaustivo y cálculo exacto de va_k^= y va_k^≡
para grafos pequeños. Es la referencia contra la que se prueba el resto.
"""

from typing import List, Optional

from core.coloracion import Coloracion
from core.grafo import CotaGrado, Grafo, componente_de, contar_bits
from utils.excepciones import ErrorLimiteBusqueda, ErrorParametro
from utils.logger import obtener_logger
from config import config


class OraculoArboricidad:
    """
    Búsqueda con retroceso sobre asignaciones de clases.

    - Vértices en orden de grado descendente.
    - Ruptura de simetría: un vértice solo puede abrir la primera clase vacía.
    - Presupuesto de tamaños: cada clase admite floor(n/t) vértices y
      exactamente n mod t clases llegan a ceil(n/t).
    - Aciclicidad y grado se comprueban al insertar cada vértice.
    """

    def __init__(self, config_obj=None, limite_nodos: Optional[int] = None):
        self.logger = obtener_logger(__name__)
        if limite_nodos is None:
            if config_obj is None:
                config_obj = config()
            limite_nodos = config_obj.oraculo.limite_nodos
        self.limite_nodos = limite_nodos
        self.nodos_ultima_busqueda = 0

    def existe_coloracion_equitativa(self, g: Grafo, t: int, k: CotaGrado) -> Optional[Coloracion]:
        """
        Testigo de una (t,k)-coloración arbórea equitativa, o None si no existe.

        Raises:
            ErrorLimiteBusqueda: Si la búsqueda supera limite_nodos (no es un "no").
        """
        if t < 1:
            raise ErrorParametro(f"t debe ser >= 1, no {t}")
        n = g.n
        self.nodos_ultima_busqueda = 0
        if t > n:
            # Convención de clases vacías: singletons más t - n clases vacías
            return Coloracion(t, tuple(range(1, n + 1)))

        base, resto = divmod(n, t)
        orden = sorted(range(n), key=lambda v: (-g.grado(v), v))
        ady = g.adyacencia
        kmax = k.k
        miembros = [0] * t
        tamanos = [0] * t
        grado_en_clase = [0] * n
        asignacion = [0] * n
        estado = {"grandes": 0, "abiertas": 0, "nodos": 0}

        def admite(v: int, c: int) -> bool:
            vecinos = ady[v] & miembros[c]
            if not vecinos:
                return True
            if kmax is not None:
                if contar_bits(vecinos) > kmax:
                    return False
                resto_vecinos = vecinos
                while resto_vecinos:
                    bajo = resto_vecinos & -resto_vecinos
                    resto_vecinos ^= bajo
                    if grado_en_clase[bajo.bit_length() - 1] >= kmax:
                        return False
            # Dos vecinos en la misma componente cerrarían un ciclo
            pendientes = vecinos
            while pendientes:
                bajo = pendientes & -pendientes
                pendientes ^= bajo
                comp = componente_de(ady, bajo.bit_length() - 1, miembros[c])
                if comp & pendientes:
                    return False
            return True

        def colocar(i: int) -> bool:
            if i == n:
                return True
            estado["nodos"] += 1
            if estado["nodos"] > self.limite_nodos:
                raise ErrorLimiteBusqueda(
                    f"Se superó el límite de {self.limite_nodos} nodos (n={n}, t={t}, k={k})",
                    nodos=estado["nodos"],
                )
            if n - i < t - estado["abiertas"]:
                return False
            v = orden[i]
            abiertas = estado["abiertas"]
            for c in range(min(abiertas + 1, t)):
                tam = tamanos[c]
                if tam == base + 1 or (tam == base and estado["grandes"] >= resto):
                    continue
                if not admite(v, c):
                    continue

                vecinos = ady[v] & miembros[c]
                for u in _bits(vecinos):
                    grado_en_clase[u] += 1
                grado_en_clase[v] = contar_bits(vecinos)
                miembros[c] |= 1 << v
                tamanos[c] += 1
                asignacion[v] = c + 1
                if tamanos[c] == base + 1:
                    estado["grandes"] += 1
                if c == abiertas:
                    estado["abiertas"] += 1

                if colocar(i + 1):
                    return True

                if c == abiertas:
                    estado["abiertas"] -= 1
                if tamanos[c] == base + 1:
                    estado["grandes"] -= 1
                asignacion[v] = 0
                tamanos[c] -= 1
                miembros[c] &= ~(1 << v)
                grado_en_clase[v] = 0
                for u in _bits(vecinos):
                    grado_en_clase[u] -= 1
            return False

        try:
            encontrado = colocar(0)
        finally:
            self.nodos_ultima_busqueda = estado["nodos"]

        self.logger.debug(
            f"n={n} t={t} k={k}: {'factible' if encontrado else 'infactible'} "
            f"({estado['nodos']} nodos)"
        )
        return Coloracion(t, tuple(asignacion)) if encontrado else None

    def arboricidad_equitativa(self, g: Grafo, k: CotaGrado) -> int:
        """va_k^=: menor t con una (t,k)-coloración arbórea equitativa (siempre <= n)."""
        _exigir_no_vacio(g)
        for t in range(1, g.n + 1):
            if self.existe_coloracion_equitativa(g, t, k) is not None:
                return t
        return g.n

    def tope_ventana_fuerte(self, n: int, k: CotaGrado) -> int:
        """
        Mayor q que hay que comprobar para va_k^≡. Con k >= 1 todo q en
        [ceil(n/2), n] es factible, así que basta llegar a ceil(n/2) - 1;
        con k = 0 las clases de dos vértices adyacentes no sirven y se
        recorre hasta n.
        """
        if k.al_menos(1):
            return (n + 1) // 2 - 1
        return n

    def arboricidad_equitativa_fuerte(self, g: Grafo, k: CotaGrado) -> int:
        """va_k^≡: 1 + mayor q infactible de la ventana, o 1 si no hay ninguno."""
        _exigir_no_vacio(g)
        for q in range(self.tope_ventana_fuerte(g.n, k), 0, -1):
            if self.existe_coloracion_equitativa(g, q, k) is None:
                return q + 1
        return 1

    def perfil_factibilidad(self, g: Grafo, k: CotaGrado) -> List[bool]:
        """Entrada t-1 = existe una (t,k)-coloración arbórea equitativa, para t = 1..n."""
        return [
            self.existe_coloracion_equitativa(g, t, k) is not None
            for t in range(1, g.n + 1)
        ]


def _bits(mascara: int):
    while mascara:
        bajo = mascara & -mascara
        mascara ^= bajo
        yield bajo.bit_length() - 1


def _exigir_no_vacio(g: Grafo) -> None:
    if g.n < 1:
        raise ErrorParametro("La arboricidad equitativa requiere n >= 1")


_oraculo_compartido: Optional[OraculoArboricidad] = None


def obtener_oraculo() -> OraculoArboricidad:
    """Instancia de proceso configurada con oraculo.limite_nodos."""
    global _oraculo_compartido
    if _oraculo_compartido is None:
        _oraculo_compartido = OraculoArboricidad()
    return _oraculo_compartido


def existe_coloracion_equitativa(g: Grafo, t: int, k: CotaGrado) -> Optional[Coloracion]:
    return obtener_oraculo().existe_coloracion_equitativa(g, t, k)


def arboricidad_equitativa(g: Grafo, k: CotaGrado) -> int:
    return obtener_oraculo().arboricidad_equitativa(g, k)


def arboricidad_equitativa_fuerte(g: Grafo, k: CotaGrado) -> int:
    return obtener_oraculo().arboricidad_equitativa_fuerte(g, k)


def perfil_factibilidad(g: Grafo, k: CotaGrado) -> List[bool]:
    return obtener_oraculo().perfil_factibilidad(g, k)


def numero_cromatico_equitativo(g: Grafo) -> int:
    """χ^= = va_0^=."""
    return arboricidad_equitativa(g, CotaGrado.finita(0))


def umbral_cromatico_equitativo(g: Grafo) -> int:
    """χ^≡ = va_0^≡."""
    return arboricidad_equitativa_fuerte(g, CotaGrado.finita(0))
