# core/familias.py
"""
Coloraciones constructivas explícitas (K_{n,n+ℓ} y ruedas) y un
resolvedor estructural exacto para grafos bi- y tripartitos completos
basado en tipos de clase.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from core.coloracion import Coloracion, validar_coloracion_arborea
from core.grafo import CotaGrado, construir_familia
from utils.excepciones import (
    ConstruccionNoAplicable,
    ErrorClaseNoClasificable,
    ErrorColoracion,
    ErrorParametro,
)
from utils.logger import obtener_logger

logger = obtener_logger(__name__)

DOS = CotaGrado.finita(2)


@dataclass(frozen=True)
class TipoClase:
    """Cantidad de vértices de la clase en cada parte."""

    conteos: Tuple[int, ...]

    @property
    def tamano(self) -> int:
        return sum(self.conteos)


NOMBRES_TIPOS = [
    f"{parte}{nivel}{marca}"
    for parte in "XYZ"
    for nivel in (1, 2)
    for marca in ("", "'", "''")
]

# Pares de ' y '' según la parte dominante: X' -> Y, X'' -> Z, Y' -> X, Y'' -> Z, Z' -> X, Z'' -> Y
_COMPANERA = {("X", "'"): 1, ("X", "''"): 2, ("Y", "'"): 0, ("Y", "''"): 2, ("Z", "'"): 0, ("Z", "''"): 1}

# Primero los tipos puros, luego los de nivel 1 con acompañante, luego los de nivel 2
_ORDEN_CLASIFICACION = (
    [f"{p}1" for p in "XYZ"]
    + [f"{p}2" for p in "XYZ"]
    + [f"{p}1{m}" for p in "XYZ" for m in ("'", "''")]
    + [f"{p}2{m}" for p in "XYZ" for m in ("'", "''")]
)


def vector_tipo(nombre: str, a: int) -> Tuple[int, int, int]:
    """Conteos (|V∩X|, |V∩Y|, |V∩Z|) del tipo con ese nombre para un a dado."""
    parte, nivel, marca = nombre[0], int(nombre[1]), nombre[2:]
    dominante = "XYZ".index(parte)
    conteos = [0, 0, 0]
    if not marca:
        conteos[dominante] = a + 1 if nivel == 1 else a
    else:
        conteos[dominante] = a if nivel == 1 else a - 1
        conteos[_COMPANERA[(parte, marca)]] = 1
    return tuple(conteos)


@dataclass
class PerfilTripartito:
    """Los 18 conteos de tipos de clase de una q-coloración de K_{n,n,n}."""

    n: int
    q: int
    a: int
    r: int
    conteos: Dict[str, int] = field(default_factory=lambda: {nombre: 0 for nombre in NOMBRES_TIPOS})

    def __getitem__(self, nombre: str) -> int:
        return self.conteos[nombre]

    def cumple_invariantes(self) -> bool:
        """Todos >= 0, suman q y los tipos de tamaño a+1 son exactamente r."""
        grandes = sum(self.conteos[f"{p}1{m}"] for p in "XYZ" for m in ("", "'", "''"))
        return (
            all(v >= 0 for v in self.conteos.values())
            and sum(self.conteos.values()) == self.q
            and grandes == self.r
        )


def _hallazgo(
    familia: str,
    parametros: Dict[str, int],
    q: int,
    k: CotaGrado,
    veredicto: str,
    clase=None,
    mixtas: Optional[int] = None,
) -> Dict[str, Any]:
    # mixed_classes: clases con vértices de ambos lados; None si no aplica
    registro = {
        "family": familia,
        "params": parametros,
        "q": q,
        "k": str(k),
        "verdict": veredicto,
        "mixed_classes": mixtas,
    }
    if clase is not None:
        registro["offending_class"] = clase
    return registro


def _repartir(vertices: Sequence[int], partes: int) -> List[List[int]]:
    """Divide vertices en `partes` bloques consecutivos de tamaños casi iguales (los mayores primero)."""
    base, resto = divmod(len(vertices), partes)
    bloques, inicio = [], 0
    for i in range(partes):
        tam = base + (1 if i < resto else 0)
        bloques.append(list(vertices[inicio : inicio + tam]))
        inicio += tam
    return bloques


def _tamanos_reparto(total: int, partes: int) -> set:
    if partes == 0:
        return set() if total == 0 else {None}
    base, resto = divmod(total, partes)
    return {base, base + 1} if resto else {base}


def _plan_bipartito(n: int, ell: int, q: int) -> Optional[Tuple[int, int]]:
    """
    Elige (s, qx): s clases mixtas {x, y} y qx clases en X; el resto de
    clases van a Y. s = 1 es la receta con una sola clase mixta; se prueban después
    s = 0 y s >= 2. qx empieza en el reparto más parejo entre los dos lados.
    """
    total = 2 * n + ell
    base, resto = divmod(total, q)
    permitidos = {base, base + 1} if resto else {base}
    candidatos_s = [1, 0] + list(range(2, n + 1))
    for s in candidatos_s:
        if s > n or s > q or (s > 0 and 2 not in permitidos):
            continue
        libres = q - s
        for qx in sorted(range(libres + 1), key=lambda x: (abs(2 * x - libres), x)):
            qy = libres - qx
            tam_x = _tamanos_reparto(n - s, qx)
            tam_y = _tamanos_reparto(n + ell - s, qy)
            if None in tam_x or None in tam_y:
                continue
            if (tam_x | tam_y) <= permitidos and 0 not in (tam_x | tam_y):
                return s, qx
    return None


def construir_coloracion_bipartita(n: int, ell: int, q: int, k: CotaGrado = DOS) -> Coloracion:
    """
    Receta de la cota superior para K_{n,n+ℓ}: una clase mixta {x, y} y el
    resto de cada lado repartido casi equitativamente en clases de un solo lado.
    El resultado siempre pasa por el validador.

    Raises:
        ErrorParametro: n < 1, ℓ fuera de [1, n] o q fuera de [1, 2n+ℓ].
        ConstruccionNoAplicable: No hay reparto equitativo o la coloración no valida.
    """
    total = 2 * n + ell
    if n < 1 or not 1 <= ell <= n:
        raise ErrorParametro(f"Se requiere 1 <= ell <= n, recibido n={n}, ell={ell}")
    if not 1 <= q <= total:
        raise ErrorParametro(f"q={q} fuera de [1, {total}] para K_{{{n},{n + ell}}}")

    parametros = {"n": n, "ell": ell}
    plan = _plan_bipartito(n, ell, q)
    if plan is None:
        hallazgo = _hallazgo("bipartite", parametros, q, k, "not_applicable")
        raise ConstruccionNoAplicable(
            f"Sin reparto equitativo para K_{{{n},{n + ell}}} con q={q}", hallazgo
        )

    s, qx = plan
    lado_x = list(range(n))
    lado_y = list(range(n, total))
    clases = [[lado_x[i], lado_y[i]] for i in range(s)]
    if qx:
        clases += _repartir(lado_x[s:], qx)
    if q - s - qx:
        clases += _repartir(lado_y[s:], q - s - qx)

    coloracion = Coloracion.desde_clases(q, clases, total)
    anfitrion = construir_familia("bipartito_completo", n, n + ell)
    _validar_o_hallazgo(anfitrion, coloracion, k, "bipartite", parametros, mixtas=s)
    logger.debug(f"K_{{{n},{n + ell}}} q={q}: {s} clase(s) mixta(s), {qx} en X")
    return coloracion


def construir_coloracion_rueda(n: int, q: int, k: CotaGrado) -> Coloracion:
    """
    V_i = {v_{jq+i} : 0 <= j <= k} sobre W_n con v_1 = vértice 0 (centro);
    los índices mayores que n se descartan.

    Raises:
        ErrorParametro: n < 4, k no finito o < 1, o q fuera de [ceil(n/k), ceil(n/2)].
        ConstruccionNoAplicable: Las clases no cubren W_n o la coloración no valida.
    """
    k = CotaGrado.parsear(k)
    if n < 4:
        raise ErrorParametro(f"La rueda requiere n >= 4, no {n}")
    if k.es_ilimitada or k.k < 1:
        raise ErrorParametro(f"La construcción de la rueda requiere k finito >= 1, no {k}")
    minimo, maximo = -(-n // k.k), -(-n // 2)
    if not minimo <= q <= maximo:
        raise ErrorParametro(f"q={q} fuera de [{minimo}, {maximo}] para W_{n}, k={k}")

    parametros = {"n": n}
    clases = [
        [j * q + i - 1 for j in range(k.k + 1) if j * q + i <= n]
        for i in range(1, q + 1)
    ]
    cubiertos = sorted(v for clase in clases for v in clase)
    if cubiertos != list(range(n)):
        faltantes = sorted(set(range(n)) - set(cubiertos))
        hallazgo = _hallazgo("wheel", parametros, q, k, "not_a_partition")
        hallazgo["uncovered"] = faltantes
        raise ConstruccionNoAplicable(f"Las clases no cubren W_{n}: faltan {faltantes}", hallazgo)

    coloracion = Coloracion.desde_clases(q, clases, n)
    _validar_o_hallazgo(construir_familia("rueda", n), coloracion, k, "wheel", parametros)
    return coloracion


def _validar_o_hallazgo(anfitrion, coloracion, k, familia, parametros, mixtas=None) -> None:
    reporte = validar_coloracion_arborea(anfitrion, coloracion, k)
    if reporte.valida:
        return
    clases = coloracion.clases()
    culpable = next((v.indice for v in reporte.clases if not v.valida), None)
    veredicto = "invalid" if reporte.equitativa else "not_equitable"
    hallazgo = _hallazgo(
        familia,
        parametros,
        coloracion.t,
        k,
        veredicto,
        clases[culpable - 1] if culpable else None,
        mixtas,
    )
    logger.warning(f"Construcción {familia} {parametros} q={coloracion.t}: {veredicto}")
    raise ConstruccionNoAplicable(
        f"La construcción {familia} no produjo una coloración válida", hallazgo
    )


def tipos_clase_admisibles(partes: Sequence[int], tamano: int, k: CotaGrado) -> List[TipoClase]:
    """
    Vectores (p_1, ..., p_m) con suma `tamano` y p_i <= partes[i] cuya clase
    induce un bosque con Δ <= k en el multipartito completo: todo en una parte,
    o tamano-1 >= 1 en una parte y un único vértice en otra (estrella K_{1,tamano-1}).
    """
    if len(partes) not in (2, 3):
        raise ErrorParametro(f"Solo se admiten 2 o 3 partes, no {len(partes)}")
    if tamano < 0:
        raise ErrorParametro(f"Tamaño negativo: {tamano}")
    m = len(partes)
    tipos = set()
    for i in range(m):
        if tamano <= partes[i]:
            conteos = [0] * m
            conteos[i] = tamano
            tipos.add(tuple(conteos))
    if tamano >= 2 and k.admite(tamano - 1):
        for i in range(m):
            for j in range(m):
                if i != j and partes[i] >= tamano - 1 and partes[j] >= 1:
                    conteos = [0] * m
                    conteos[i] = tamano - 1
                    conteos[j] = 1
                    tipos.add(tuple(conteos))
    return [TipoClase(c) for c in sorted(tipos, reverse=True)]


def _combinar(
    tipos: List[TipoClase], cupo: int, restante: List[int], desde: int = 0
) -> Iterator[List[TipoClase]]:
    """Multiconjuntos de `cupo` tipos (índices >= desde) que caben en `restante`."""
    if cupo == 0:
        yield []
        return
    for indice in range(desde, len(tipos)):
        conteos = tipos[indice].conteos
        if any(c > r for c, r in zip(conteos, restante)):
            continue
        for i, c in enumerate(conteos):
            restante[i] -= c
        for resto in _combinar(tipos, cupo - 1, restante, indice):
            yield [tipos[indice]] + resto
        for i, c in enumerate(conteos):
            restante[i] += c


def resolver_multipartito_completo(partes: Sequence[int], t: int, k: CotaGrado) -> Optional[Coloracion]:
    """
    Decide exactamente si K_{partes} tiene una (t,k)-coloración arbórea
    equitativa combinando tipos admisibles de tamaños floor(N/t) y ceil(N/t).

    Returns:
        Coloración testigo (vértices asignados por parte en orden de índice) o None.
    """
    if len(partes) not in (2, 3):
        raise ErrorParametro(f"Solo se admiten 2 o 3 partes, no {len(partes)}")
    if t < 1:
        raise ErrorParametro(f"t debe ser >= 1, no {t}")
    total = sum(partes)
    if t > total:
        return Coloracion(t, tuple(range(1, total + 1)))

    base, resto = divmod(total, t)
    grandes = tipos_clase_admisibles(partes, base + 1, k) if resto else []
    chicos = tipos_clase_admisibles(partes, base, k)
    restante = list(partes)

    for seleccion_grandes in _combinar(grandes, resto, restante):
        usados = [sum(tipo.conteos[i] for tipo in seleccion_grandes) for i in range(len(partes))]
        faltan = [p - u for p, u in zip(partes, usados)]
        for seleccion_chicos in _combinar(chicos, t - resto, list(faltan)):
            cubiertos = [sum(tipo.conteos[i] for tipo in seleccion_chicos) for i in range(len(partes))]
            if cubiertos == faltan:
                return _realizar(partes, t, seleccion_grandes + seleccion_chicos)
    return None


def _realizar(partes: Sequence[int], t: int, tipos: List[TipoClase]) -> Coloracion:
    siguiente = [sum(partes[:i]) for i in range(len(partes))]
    clases = []
    for tipo in tipos:
        clase = []
        for i, c in enumerate(tipo.conteos):
            clase.extend(range(siguiente[i], siguiente[i] + c))
            siguiente[i] += c
        clases.append(clase)
    return Coloracion.desde_clases(t, clases, sum(partes))


def arboricidad_fuerte_multipartita(partes: Sequence[int], k: CotaGrado) -> int:
    """va_k^≡ de K_{partes} con el resolvedor estructural (misma ventana que el oráculo)."""
    total = sum(partes)
    if total < 1:
        raise ErrorParametro("La arboricidad equitativa requiere n >= 1")
    tope = (total + 1) // 2 - 1 if k.al_menos(1) else total
    for q in range(tope, 0, -1):
        if resolver_multipartito_completo(partes, q, k) is None:
            return q + 1
    return 1


def perfil_tripartito(c: Coloracion, n: int) -> PerfilTripartito:
    """
    Conteos de los 18 tipos para una q-coloración de K_{n,n,n} con partes
    X = 0..n-1, Y = n..2n-1, Z = 2n..3n-1.

    Raises:
        ErrorClaseNoClasificable: Alguna clase no encaja en ninguno de los tipos.
    """
    if c.n != 3 * n:
        raise ErrorColoracion(f"K_{{{n},{n},{n}}} tiene {3 * n} vértices, la coloración {c.n}")
    q = c.t
    a = (3 * n) // q
    perfil = PerfilTripartito(n=n, q=q, a=a, r=3 * n - a * q)
    vectores = [(nombre, vector_tipo(nombre, a)) for nombre in _ORDEN_CLASIFICACION]
    for indice, clase in enumerate(c.clases(), start=1):
        conteos = (
            sum(1 for v in clase if v < n),
            sum(1 for v in clase if n <= v < 2 * n),
            sum(1 for v in clase if v >= 2 * n),
        )
        nombre = next((nombre for nombre, vector in vectores if vector == conteos), None)
        if nombre is None:
            raise ErrorClaseNoClasificable(
                f"La clase {indice} con conteos {conteos} no encaja en ningún tipo (a={a})",
                clase=indice,
                conteos=conteos,
            )
        perfil.conteos[nombre] += 1
    return perfil


def verificar_igualdades_tripartitas(p: PerfilTripartito) -> bool:
    """Las tres igualdades lineales sobre los conteos, una por parte."""
    a, c = p.a, p.conteos

    def lado(x: str, y: str, z: str, prima_y: str, prima_z: str) -> int:
        # x domina; y, z aportan un vértice a x a través de sus tipos con esa marca
        return (
            (a + 1) * c[f"{x}1"]
            + a * c[f"{x}2"]
            + a * c[f"{x}1'"]
            + a * c[f"{x}1''"]
            + (a - 1) * c[f"{x}2'"]
            + (a - 1) * c[f"{x}2''"]
            + c[f"{y}1{prima_y}"]
            + c[f"{y}2{prima_y}"]
            + c[f"{z}1{prima_z}"]
            + c[f"{z}2{prima_z}"]
        )

    return (
        lado("X", "Y", "Z", "'", "'") == p.n
        and lado("Y", "X", "Z", "'", "''") == p.n
        and lado("Z", "X", "Y", "''", "''") == p.n
    )


def cota_teorema_bipartito(n: int, ell: int) -> int:
    return 2 * ((n + ell + 1) // 3)


def barrido_teorema_bipartito(n_max: int = 8) -> List[Dict[str, Any]]:
    """va_2^≡(K_{n,n+ℓ}) con el resolvedor frente a 2*floor((n+ℓ+1)/3), 1 <= ℓ <= n <= n_max."""
    filas = []
    for n in range(1, n_max + 1):
        for ell in range(1, n + 1):
            valor = arboricidad_fuerte_multipartita((n, n + ell), DOS)
            cota = cota_teorema_bipartito(n, ell)
            filas.append({"n": n, "ell": ell, "va": valor, "bound": cota, "holds": valor <= cota})
    return filas


def barrido_proposicion_bipartita(ts: Sequence[int] = (1, 2, 3)) -> List[Dict[str, Any]]:
    """Para n = 3t, compara va_2^≡(K_{n,n+1}) con 2*floor((n+2)/3)."""
    filas = []
    for t in ts:
        n = 3 * t
        valor = arboricidad_fuerte_multipartita((n, n + 1), DOS)
        formula = 2 * ((n + 2) // 3)
        filas.append({"t": t, "n": n, "va": valor, "formula": formula, "equal": valor == formula})
    return filas


def barrido_construcciones(n_max_bipartito: int = 8, ruedas: Sequence[int] = range(5, 11), ks_rueda: Sequence[int] = (2, 3)) -> List[Dict[str, Any]]:
    """
    Ejecuta ambas construcciones sobre su rejilla anunciada y devuelve un
    registro por caso: válido o el hallazgo correspondiente.
    """
    registros = []
    for n in range(1, n_max_bipartito + 1):
        for ell in range(1, n + 1):
            for q in range(max(1, cota_teorema_bipartito(n, ell)), 2 * n + ell + 1):
                try:
                    construir_coloracion_bipartita(n, ell, q)
                    s, _ = _plan_bipartito(n, ell, q)
                    registros.append(
                        _hallazgo("bipartite", {"n": n, "ell": ell}, q, DOS, "valid", mixtas=s)
                    )
                except ConstruccionNoAplicable as e:
                    registros.append(e.hallazgo)
    for n in ruedas:
        for k in ks_rueda:
            cota = CotaGrado.finita(k)
            for q in range(-(-n // k), -(-n // 2) + 1):
                try:
                    construir_coloracion_rueda(n, q, cota)
                    registros.append(_hallazgo("wheel", {"n": n}, q, cota, "valid"))
                except ConstruccionNoAplicable as e:
                    registros.append(e.hallazgo)
    return registros
