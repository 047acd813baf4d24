# core/teoremas.py
"""
Cotas de forma cerrada y predicados de caracterización basados en
emparejamientos, cada uno contrastable con el oráculo.
"""

from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional, Tuple

from core.grafo import (
    CotaGrado,
    Grafo,
    codificar_graph6,
    complemento,
    contiene_p4,
    emparejamiento_maximo,
    es_bosque_con_grado_maximo,
)
from core.oraculo import OraculoArboricidad, obtener_oraculo
from utils.excepciones import ErrorParametro
from utils.logger import obtener_logger

logger = obtener_logger(__name__)


def techo_mitad(n: int) -> int:
    return (n + 1) // 2


@dataclass(frozen=True)
class ParametrosUmbral:
    """m clases de tamaño 3 y r de tamaño 2 con n = 3m + 2r y m + r = objetivo."""

    m: int
    r: int
    objetivo: int


def parametros_umbral(n: int, objetivo: int) -> ParametrosUmbral:
    """
    Solución única de n = 3m + 2r, m + r = objetivo.

    Raises:
        ErrorParametro: Si no hay solución con m, r >= 0.
    """
    m = n - 2 * objetivo
    r = objetivo - m
    if m < 0 or r < 0:
        raise ErrorParametro(
            f"n={n}, objetivo={objetivo} no tiene solución no negativa (m={m}, r={r})"
        )
    return ParametrosUmbral(m=m, r=r, objetivo=objetivo)


def predicado_va_igual_1(g: Grafo, k: CotaGrado) -> bool:
    """va_k^≡(g) = 1 exactamente cuando g es un bosque con Δ <= k."""
    return es_bosque_con_grado_maximo(g, k)


def _es_completo(g: Grafo) -> bool:
    return g.num_aristas == g.n * (g.n - 1) // 2


def predicado_va_igual_mitad(g: Grafo) -> bool:
    """
    Caracterización de va_k^≡(g) = ceil(n/2):
    n impar >= 3: g = K_n; n = 2: siempre (K_2 o 2K_1); n = 4: el complemento
    no contiene P_4; n par >= 6: el emparejamiento máximo del complemento
    tiene a lo sumo m-1 aristas, con m de parametros_umbral(n, ceil(n/2)-1).
    """
    n = g.n
    if n < 2:
        raise ErrorParametro(f"El predicado requiere n >= 2, no {n}")
    if n % 2 == 1:
        return _es_completo(g)
    if n == 2:
        return True
    comp = complemento(g)
    if n == 4:
        return not contiene_p4(comp)
    umbral = parametros_umbral(n, techo_mitad(n) - 1)
    return emparejamiento_maximo(comp).tamano <= umbral.m - 1


def rango_va_igual_mitad_menos_1(n: int) -> bool:
    return n >= 9 and n != 10


def predicado_va_igual_mitad_menos_1(g: Grafo) -> bool:
    """
    Caracterización de va_k^≡(g) = ceil(n/2) - 1 para n >= 9, n != 10:
    |M| del complemento en [2, m-1] (n par >= 12) o en [1, m-1] (n impar),
    con m de parametros_umbral(n, ceil(n/2)-2).
    """
    n = g.n
    if not rango_va_igual_mitad_menos_1(n):
        raise ErrorParametro(f"El predicado solo aplica a n >= 9, n != 10; recibido n={n}")
    umbral = parametros_umbral(n, techo_mitad(n) - 2)
    tamano = emparejamiento_maximo(complemento(g)).tamano
    minimo = 2 if n % 2 == 0 else 1
    return minimo <= tamano <= umbral.m - 1


def cotas_estrella(n: int, k: int) -> Tuple[int, int]:
    """(1 + ceil((n-k-1)/(k+2)), ceil(n/k)) para K_{1,n-1}."""
    if n < 2:
        raise ErrorParametro(f"La estrella requiere n >= 2, no {n}")
    if k < 1:
        raise ErrorParametro(f"Las cotas de la estrella requieren k >= 1, no {k}")
    inferior = 1 + max(0, -(-(n - k - 1) // (k + 2)))
    return inferior, -(-n // k)


def cotas_forma_cerrada(familia: str, *parametros: int) -> int:
    """
    Valor de la fórmula asociada a la familia:
    bipartite(n, ℓ) -> 2*floor((n+ℓ+1)/3); bipartite_plus_one(n) -> 2*floor((n+2)/3);
    wheel(n, k) -> ceil(n/k); star(n, k) -> ceil(n/k).

    Raises:
        ErrorParametro: Familia desconocida o aridad incorrecta.
    """
    formulas = {
        "bipartite": (2, lambda n, ell: 2 * ((n + ell + 1) // 3)),
        "bipartite_plus_one": (1, lambda n: 2 * ((n + 2) // 3)),
        "wheel": (2, lambda n, k: -(-n // k)),
        "star": (2, lambda n, k: cotas_estrella(n, k)[1]),
    }
    if familia not in formulas:
        raise ErrorParametro(f"Familia desconocida: '{familia}'")
    aridad, formula = formulas[familia]
    if len(parametros) != aridad:
        raise ErrorParametro(f"'{familia}' requiere {aridad} parámetro(s)")
    if familia in ("wheel", "star") and parametros[1] < 1:
        raise ErrorParametro(f"'{familia}' requiere k >= 1")
    return formula(*parametros)


@dataclass
class Contraejemplo:
    predicado: str
    graph6: str
    k: str
    valor_oraculo: int
    veredicto_predicado: bool

    def a_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class ReporteTeoremas:
    """Valor del oráculo y veredicto de cada predicado aplicable para un grafo."""

    graph6: str
    n: int
    k: str
    valor_oraculo: int
    predicados: Dict[str, bool] = field(default_factory=dict)
    esperados: Dict[str, bool] = field(default_factory=dict)
    contraejemplos: List[Contraejemplo] = field(default_factory=list)

    @property
    def concuerda(self) -> bool:
        return not self.contraejemplos

    def a_dict(self) -> Dict[str, Any]:
        datos = asdict(self)
        datos["concuerda"] = self.concuerda
        return datos


def validar_cruzado(g: Grafo, k: CotaGrado, oraculo: Optional[OraculoArboricidad] = None) -> ReporteTeoremas:
    """
    Calcula va_k^≡ con el oráculo y cada predicado aplicable; registra un
    contraejemplo por cada desacuerdo.
    """
    oraculo = oraculo or obtener_oraculo()
    valor = oraculo.arboricidad_equitativa_fuerte(g, k)
    g6 = codificar_graph6(g).decode("ascii")
    reporte = ReporteTeoremas(graph6=g6, n=g.n, k=str(k), valor_oraculo=valor)

    casos = {"va_equals_1": (predicado_va_igual_1(g, k), valor == 1)}
    if g.n >= 2:
        casos["va_equals_half"] = (predicado_va_igual_mitad(g), valor == techo_mitad(g.n))
    if rango_va_igual_mitad_menos_1(g.n):
        casos["va_equals_half_minus_1"] = (
            predicado_va_igual_mitad_menos_1(g),
            valor == techo_mitad(g.n) - 1,
        )

    for nombre, (veredicto, esperado) in casos.items():
        reporte.predicados[nombre] = veredicto
        reporte.esperados[nombre] = esperado
        if veredicto != esperado:
            reporte.contraejemplos.append(Contraejemplo(nombre, g6, str(k), valor, veredicto))
            logger.warning(f"{nombre} discrepa en {g6} (k={k}): oráculo {valor}")
    return reporte
