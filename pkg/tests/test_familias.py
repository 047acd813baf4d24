from itertools import product

import numpy as np
import pytest

from core.coloracion import Coloracion, es_equitativa, validar_coloracion_arborea
from core.familias import (
    NOMBRES_TIPOS,
    arboricidad_fuerte_multipartita,
    barrido_construcciones,
    barrido_proposicion_bipartita,
    barrido_teorema_bipartito,
    construir_coloracion_bipartita,
    construir_coloracion_rueda,
    cota_teorema_bipartito,
    perfil_tripartito,
    resolver_multipartito_completo,
    tipos_clase_admisibles,
    vector_tipo,
    verificar_igualdades_tripartitas,
)
from core.grafo import INFINITO, CotaGrado, construir_familia
from core.oraculo import OraculoArboricidad
from utils.excepciones import ConstruccionNoAplicable, ErrorClaseNoClasificable, ErrorParametro

from estrategias import COTAS_USUALES

DOS = CotaGrado.finita(2)


def test_bipartito_k67_vale_cuatro():
    assert arboricidad_fuerte_multipartita((6, 7), DOS) == 4


@pytest.mark.parametrize("n", range(1, 6))
def test_construccion_bipartita_valida_o_hallazgo(n):
    for ell in range(1, n + 1):
        anfitrion = construir_familia("bipartito_completo", n, n + ell)
        for q in range(cota_teorema_bipartito(n, ell), 2 * n + ell + 1):
            try:
                coloracion = construir_coloracion_bipartita(n, ell, q)
            except ConstruccionNoAplicable as e:
                assert e.hallazgo["family"] == "bipartite"
                assert e.hallazgo["q"] == q
                continue
            assert validar_coloracion_arborea(anfitrion, coloracion, DOS).valida


def test_construccion_bipartita_casos_con_varias_mixtas():
    for n, ell, q in [(4, 2, 5), (3, 1, 7)]:
        anfitrion = construir_familia("bipartito_completo", n, n + ell)
        assert validar_coloracion_arborea(anfitrion, construir_coloracion_bipartita(n, ell, q), DOS).valida


def test_construccion_bipartita_fuera_de_rango():
    with pytest.raises(ErrorParametro):
        construir_coloracion_bipartita(2, 3, 3)
    with pytest.raises(ErrorParametro):
        construir_coloracion_bipartita(2, 1, 6)


def test_construccion_bipartita_sin_reparto():
    # Una sola clase no puede ser de un solo lado
    with pytest.raises(ConstruccionNoAplicable) as info:
        construir_coloracion_bipartita(1, 1, 1)
    assert info.value.hallazgo["verdict"] == "not_applicable"


def test_construccion_bipartita_clase_mixta_con_k_cero():
    with pytest.raises(ConstruccionNoAplicable) as info:
        construir_coloracion_bipartita(1, 1, 2, CotaGrado.finita(0))
    assert info.value.hallazgo["verdict"] == "invalid"
    assert info.value.hallazgo["offending_class"] == [0, 1]


def test_rueda_cinco():
    coloracion = construir_coloracion_rueda(5, 3, DOS)
    assert coloracion.clases() == [[0, 3], [1, 4], [2]]


@pytest.mark.parametrize("n", range(5, 11))
@pytest.mark.parametrize("k", [2, 3])
def test_construccion_rueda_valida_o_hallazgo(n, k):
    cota = CotaGrado.finita(k)
    rueda = construir_familia("rueda", n)
    for q in range(-(-n // k), -(-n // 2) + 1):
        try:
            coloracion = construir_coloracion_rueda(n, q, cota)
        except ConstruccionNoAplicable as e:
            assert e.hallazgo["verdict"] in ("not_a_partition", "invalid", "not_equitable")
            continue
        assert validar_coloracion_arborea(rueda, coloracion, cota).valida


def test_construccion_rueda_parametros():
    with pytest.raises(ErrorParametro):
        construir_coloracion_rueda(3, 2, DOS)
    with pytest.raises(ErrorParametro):
        construir_coloracion_rueda(8, 3, INFINITO)
    with pytest.raises(ErrorParametro):
        construir_coloracion_rueda(8, 2, DOS)


def test_tipos_admisibles():
    tipos = {t.conteos for t in tipos_clase_admisibles((3, 4), 3, DOS)}
    assert tipos == {(3, 0), (0, 3), (2, 1), (1, 2)}
    tipos = {t.conteos for t in tipos_clase_admisibles((3, 4), 4, DOS)}
    assert tipos == {(0, 4)}
    with pytest.raises(ErrorParametro):
        tipos_clase_admisibles((1,), 1, DOS)


def _coincide_con_oraculo(partes, ks):
    oraculo = OraculoArboricidad()
    anfitrion = construir_familia(
        "bipartito_completo" if len(partes) == 2 else "tripartito_completo", *partes
    )
    total = sum(partes)
    for k in ks:
        for t in range(1, total + 1):
            estructural = resolver_multipartito_completo(partes, t, k)
            exhaustivo = oraculo.existe_coloracion_equitativa(anfitrion, t, k)
            assert (estructural is None) == (exhaustivo is None), (partes, t, str(k))
            if estructural is not None:
                assert validar_coloracion_arborea(anfitrion, estructural, k).valida


@pytest.mark.parametrize("a,b", [(a, b) for a in range(0, 8) for b in range(a, 8) if 1 <= a + b <= 7])
def test_resolvedor_bipartito_coincide_con_oraculo(a, b):
    _coincide_con_oraculo((a, b), COTAS_USUALES)


@pytest.mark.lento
@pytest.mark.parametrize("a,b", [(a, b) for a in range(0, 10) for b in range(a, 10) if a + b in (8, 9)])
def test_resolvedor_bipartito_coincide_con_oraculo_ordenes_altos(a, b):
    _coincide_con_oraculo((a, b), COTAS_USUALES)


@pytest.mark.parametrize("n", [1, 2])
def test_resolvedor_tripartito_coincide_con_oraculo(n):
    _coincide_con_oraculo((n, n, n), [INFINITO])


@pytest.mark.lento
def test_resolvedor_tripartito_k333():
    _coincide_con_oraculo((3, 3, 3), [INFINITO])


def test_barrido_teorema_bipartito():
    filas = barrido_teorema_bipartito(5)
    assert len(filas) == 15
    assert all(f["holds"] for f in filas)


@pytest.mark.lento
def test_barrido_teorema_bipartito_completo():
    assert all(f["holds"] for f in barrido_teorema_bipartito(8))


def test_barrido_proposicion_bipartita():
    filas = barrido_proposicion_bipartita((1, 2))
    assert [f["va"] for f in filas] == [2, 4]
    assert all(f["equal"] for f in filas)


def test_barrido_construcciones_sin_fallos_silenciosos():
    registros = barrido_construcciones(n_max_bipartito=3, ruedas=range(5, 8))
    assert registros
    veredictos = {r["verdict"] for r in registros}
    assert veredictos <= {"valid", "not_applicable", "invalid", "not_equitable", "not_a_partition"}
    assert {r["family"] for r in registros} == {"bipartite", "wheel"}


def test_barrido_construcciones_registra_clases_mixtas():
    registros = barrido_construcciones(n_max_bipartito=4, ruedas=range(5, 7))
    assert all("mixed_classes" in r for r in registros)
    assert all(r["mixed_classes"] is None for r in registros if r["family"] == "wheel")
    validos = [r for r in registros if r["family"] == "bipartite" and r["verdict"] == "valid"]
    assert validos
    for r in validos:
        n, ell = r["params"]["n"], r["params"]["ell"]
        c = construir_coloracion_bipartita(n, ell, r["q"])
        mixtas = sum(1 for clase in c.clases() if min(clase) < n <= max(clase))
        assert r["mixed_classes"] == mixtas


def test_vectores_de_tipo():
    assert vector_tipo("X1", 2) == (3, 0, 0)
    assert vector_tipo("Y2", 2) == (0, 2, 0)
    assert vector_tipo("X1'", 2) == (2, 1, 0)
    assert vector_tipo("X1''", 2) == (2, 0, 1)
    assert vector_tipo("Y2'", 2) == (1, 1, 0)
    assert vector_tipo("Z2''", 3) == (0, 1, 2)
    assert len(NOMBRES_TIPOS) == 18


def test_clase_no_clasificable():
    with pytest.raises(ErrorClaseNoClasificable) as info:
        perfil_tripartito(Coloracion(1, (1,) * 6), 2)
    assert info.value.conteos == (2, 2, 2)


def _particiones_equitativas(n: int, q: int):
    """Particiones de 0..n-1 en q clases de tamaño casi igual, sin repetir por renombrado."""
    base, resto = divmod(n, q)

    def extender(asignacion, tamanos, abiertas):
        if len(asignacion) == n:
            if sum(1 for t in tamanos if t == base + 1) == resto and abiertas == q:
                yield tuple(asignacion)
            return
        for c in range(min(abiertas + 1, q)):
            if tamanos[c] == base + (1 if resto else 0):
                continue
            tamanos[c] += 1
            asignacion.append(c + 1)
            yield from extender(asignacion, tamanos, max(abiertas, c + 1))
            asignacion.pop()
            tamanos[c] -= 1

    yield from extender([], [0] * q, 0)


def _veredicto_estructural(c: Coloracion, n: int) -> bool:
    try:
        perfil = perfil_tripartito(c, n)
    except ErrorClaseNoClasificable:
        return False
    return perfil.cumple_invariantes() and verificar_igualdades_tripartitas(perfil)


@pytest.mark.parametrize("q", range(2, 7))
def test_caracterizacion_tripartita_k222_exhaustiva(q):
    anfitrion = construir_familia("tripartito_completo", 2, 2, 2)
    vistas = 0
    for asignacion in _particiones_equitativas(6, q):
        c = Coloracion(q, asignacion)
        assert es_equitativa(c)
        valida = validar_coloracion_arborea(anfitrion, c, INFINITO).valida
        assert valida == _veredicto_estructural(c, 2), asignacion
        vistas += 1
    assert vistas > 0


@pytest.mark.lento
def test_caracterizacion_tripartita_k333_muestreada():
    anfitrion = construir_familia("tripartito_completo", 3, 3, 3)
    rng = np.random.default_rng(20160101)
    for _ in range(100_000):
        q = int(rng.integers(2, 10))
        base, resto = divmod(9, q)
        etiquetas = [c + 1 for c in range(q) for _ in range(base + (1 if c < resto else 0))]
        c = Coloracion(q, tuple(int(x) for x in rng.permutation(etiquetas)))
        valida = validar_coloracion_arborea(anfitrion, c, INFINITO).valida
        assert valida == _veredicto_estructural(c, 3)
