import csv
import json

import networkx as nx
import pytest

from core.experimentos import (
    CHEQUEOS,
    barrido_nordhaus_gaddum,
    caracterizacion_extremal_inferior,
    cotas_nordhaus_gaddum,
    grafos_casi_completos,
    modo_de,
    muestrear_grafos,
    nordhaus_gaddum,
    sondear,
    verificar_subgrafos_generadores,
)
from core.gestor_reportes import GestorReportes
from core.grafo import (
    INFINITO,
    CotaGrado,
    Grafo,
    codificar_graph6,
    construir_familia,
    enumerar_grafos_etiquetados,
)
from utils.excepciones import ErrorParametro

from estrategias import COTAS_USUALES

UNO = CotaGrado.finita(1)
DOS = CotaGrado.finita(2)


def test_nordhaus_gaddum_p4_y_c5(p4, c5):
    r = nordhaus_gaddum(p4, UNO)
    assert (r.va_grafo, r.va_complemento, r.suma, r.producto) == (2, 2, 4, 4)
    assert r.cumple
    r = nordhaus_gaddum(c5, UNO)
    assert r.suma == 4 == cotas_nordhaus_gaddum(5)[0]
    assert r.cumple


def test_cotas_nordhaus_gaddum():
    assert cotas_nordhaus_gaddum(4) == (4, 4)
    assert cotas_nordhaus_gaddum(3) == (4, 4)
    assert cotas_nordhaus_gaddum(5) == (4, 4)
    assert cotas_nordhaus_gaddum(7) == (6, 9)


def test_nordhaus_gaddum_requiere_dos_vertices():
    with pytest.raises(ErrorParametro):
        nordhaus_gaddum(Grafo.vacio(1), UNO)


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("k", COTAS_USUALES, ids=str)
def test_nordhaus_gaddum_exhaustivo(n, k):
    for g in enumerar_grafos_etiquetados(n):
        assert nordhaus_gaddum(g, k).cumple


@pytest.mark.lento
@pytest.mark.parametrize("k", COTAS_USUALES, ids=str)
def test_nordhaus_gaddum_exhaustivo_orden_seis(k):
    for g in enumerar_grafos_etiquetados(6):
        assert nordhaus_gaddum(g, k).cumple


def test_caracterizacion_extremal(p4):
    assert caracterizacion_extremal_inferior(p4, DOS)
    assert not caracterizacion_extremal_inferior(p4, UNO)
    reetiquetado = Grafo.desde_aristas(4, [(2, 0), (0, 3), (3, 1)])
    assert caracterizacion_extremal_inferior(reetiquetado, INFINITO)
    assert caracterizacion_extremal_inferior(Grafo.vacio(2), UNO)
    assert caracterizacion_extremal_inferior(Grafo.desde_aristas(3, [(0, 1)]), DOS)
    assert not caracterizacion_extremal_inferior(construir_familia("completo", 3), INFINITO)
    assert not caracterizacion_extremal_inferior(Grafo.vacio(2), CotaGrado.finita(0))


def test_muestreo_determinista():
    a = muestrear_grafos(6, 20, 7)
    b = muestrear_grafos(6, 20, 7)
    assert a == b
    assert all(g.n == 6 for g in a)
    assert len({codificar_graph6(g) for g in a}) > 1


def test_grafos_casi_completos():
    familias = grafos_casi_completos(5)
    assert familias["K_n-e"].num_aristas == 9
    assert familias["K_n-2e"].num_aristas == 8
    assert familias["K_n-P3"].num_aristas == 8
    assert not nx.is_isomorphic(familias["K_n-2e"].a_networkx(), familias["K_n-P3"].a_networkx())
    with pytest.raises(ErrorParametro):
        grafos_casi_completos(3)


def test_subgrafos_generadores_no_aumentan():
    resultado = verificar_subgrafos_generadores(cantidad=40, n_max=6, semilla=3)
    assert resultado["pairs"] == 40
    assert resultado["violations"] == []


@pytest.mark.lento
def test_subgrafos_generadores_no_aumentan_quinientos_pares_orden_siete():
    resultado = verificar_subgrafos_generadores(cantidad=500, n_max=7)
    assert resultado["pairs"] == 500
    assert resultado["violations"] == []


def test_modos_desde_configuracion():
    assert modo_de("thm3_3", UNO) == "report"
    assert modo_de("thm3_3", DOS) == "assert"
    assert modo_de("thm3_3", INFINITO) == "report"
    assert modo_de("thm3_4", INFINITO) == "assert"
    assert modo_de("ng_extremal", DOS) == "report"
    assert modo_de("prop3_1", UNO) == "assert"
    assert modo_de("prop3_1", UNO, forzar="report") == "report"
    assert modo_de("thm3_4", DOS, n=10) == "report"
    assert modo_de("thm3_4", DOS, n=8) == "report"
    assert modo_de("thm3_4", DOS, n=11) == "assert"


def test_sondeo_orden_diez_solo_informa_thm3_4():
    # K_10 sin dos aristas disjuntas alcanza ceil(n/2) - 1 = 4 con k = 2
    g = Grafo.desde_aristas(10, [(u, v) for u in range(10) for v in range(u + 1, 10)
                                 if (u, v) not in ((0, 1), (2, 3))])
    assert codificar_graph6(g) == b"I]~~~~~~w"
    reporte = sondear(grafos=[g], ks=[DOS], chequeos=["thm3_4"], trabajos=1)
    assert reporte.fallos_afirmados == 0
    assert reporte.conteos["thm3_4"]["2"]["examined"] == 1
    assert [(c["observed"], c["mode"]) for c in reporte.contraejemplos] == [(4, "report")]


def test_sondeo_orden_cuatro_sin_fallos_afirmados():
    reporte = sondear(orden=4, ks=COTAS_USUALES, trabajos=1)
    assert reporte.parametros["graphs"] == 64
    assert reporte.fallos_afirmados == 0
    for chequeo in CHEQUEOS:
        for k, contador in reporte.conteos[chequeo].items():
            fallidos = [
                c for c in reporte.contraejemplos if c["check"] == chequeo and c["k"] == k
            ]
            assert contador["examined"] - contador["passed"] == len(fallidos)
            assert contador["capped"] == 0
    assert reporte.conteos["prop3_1"]["1"]["examined"] == 64
    # La estrella K_{1,3} aparece en modo report con k = inf
    estrellas = [c for c in reporte.contraejemplos if c["check"] == "thm3_3" and c["k"] == "inf"]
    assert len(estrellas) == 4
    assert all(c["mode"] == "report" for c in estrellas)


def test_sondeo_ordenado_por_chequeo_cota_y_graph6():
    reporte = sondear(orden=4, ks=[INFINITO, UNO], chequeos=["thm3_3", "prop3_2"], modo="report")
    assert reporte.parametros["checks"] == ["prop3_2", "thm3_3"]
    assert reporte.parametros["k"] == ["1", "inf"]
    claves = [
        (CHEQUEOS.index(c["check"]), reporte.parametros["k"].index(c["k"]), c["graph6"])
        for c in reporte.contraejemplos
    ]
    assert claves == sorted(claves)
    assert all(c["mode"] == "report" for c in reporte.contraejemplos)


def test_sondeo_identico_con_varios_procesos():
    argumentos = dict(orden=5, ks=[UNO, INFINITO], chequeos=["prop3_1", "thm3_3", "ng_bounds"])
    secuencial = sondear(trabajos=1, **argumentos).a_dict()
    paralelo = sondear(trabajos=2, **argumentos).a_dict()
    assert json.dumps(secuencial, sort_keys=True) == json.dumps(paralelo, sort_keys=True)
    assert "timing" not in secuencial


@pytest.mark.lento
def test_sondeo_orden_cinco_con_ocho_procesos():
    uno = sondear(orden=5, ks=COTAS_USUALES, trabajos=1).a_dict()
    ocho = sondear(orden=5, ks=COTAS_USUALES, trabajos=8).a_dict()
    assert json.dumps(uno, sort_keys=True) == json.dumps(ocho, sort_keys=True)


@pytest.mark.lento
@pytest.mark.parametrize("n", [5, 6])
def test_sondeo_exhaustivo_sin_fallos_afirmados(n):
    assert sondear(orden=n, ks=COTAS_USUALES).fallos_afirmados == 0


def test_sondeo_desde_coleccion(k4, p4):
    reporte = sondear(grafos=[k4, p4, k4], ks=[INFINITO], chequeos=["prop3_1"])
    assert reporte.parametros["graphs"] == 3
    assert reporte.conteos["prop3_1"]["inf"]["passed"] == 3


def test_sondeo_valida_sus_argumentos(k4):
    with pytest.raises(ErrorParametro):
        sondear()
    with pytest.raises(ErrorParametro):
        sondear(orden=3, grafos=[k4])
    with pytest.raises(ErrorParametro):
        sondear(orden=3, chequeos=["thm9_9"])


def test_sondeo_con_k_cero_omite_chequeos_acotados():
    reporte = sondear(orden=3, ks=[CotaGrado.finita(0)], chequeos=["prop3_1", "prop3_2"])
    assert reporte.conteos["prop3_1"]["0"]["examined"] == 0
    assert reporte.conteos["prop3_2"]["0"]["examined"] == 8


def test_barrido_nordhaus_gaddum_orden_cuatro(p4):
    resultado = barrido_nordhaus_gaddum(orden=4, ks=[UNO])
    fila = resultado["rows"][0]
    assert fila["k"] == "1"
    assert fila["graphs"] == 64
    assert fila["max_sum"] == 4
    assert fila["violations"] == []
    assert codificar_graph6(p4).decode("ascii") in fila["max_sum_graphs"]
    assert fila["min_sum"] == 3


def test_gestor_reportes_escribe_json_csv_y_jsonl(tmp_path):
    reporte = sondear(orden=4, ks=[INFINITO], chequeos=["thm3_3"], modo="report")
    gestor = GestorReportes()

    ruta_json = gestor.guardar_reporte(reporte.a_dict(), tmp_path / "a" / "b" / "sondeo.json")
    assert json.loads(ruta_json.read_text(encoding="utf-8")) == json.loads(json.dumps(reporte.a_dict()))

    ruta_csv = gestor.guardar_reporte(reporte.a_dict(), tmp_path / "sondeo.csv")
    with open(ruta_csv, encoding="utf-8", newline="") as f:
        filas = list(csv.DictReader(f))
    assert [f["graph6"] for f in filas] == [c["graph6"] for c in reporte.contraejemplos]
    assert filas[0]["mode"] == "report"

    ruta_jsonl = gestor.guardar_jsonl([{"b": 1}, {"a": 2}], tmp_path / "hallazgos.jsonl")
    assert ruta_jsonl.read_text(encoding="utf-8").splitlines() == ['{"b": 1}', '{"a": 2}']
    assert gestor.obtener_estadisticas()["archivos_guardados"] == 3
