import json

import pytest

from ui.linea_comandos import SALIDA_NEGATIVA, SALIDA_OK, SALIDA_USO, ejecutar


def _salida(capsys):
    return json.loads(capsys.readouterr().out)


def test_strong_k4(capsys):
    assert ejecutar(["strong", "--graph", "C~", "--k", "inf"]) == SALIDA_OK
    datos = _salida(capsys)
    assert datos["va_equitable"] == 2
    assert datos["va_strong"] == 2
    assert datos["profile"] == [False, True, True, True]
    assert datos["k"] == "inf"


def test_validate_triangulo_en_una_clase(capsys):
    codigo = ejecutar(
        ["validate", "--graph", "Bw", "--coloring", '{"t": 1, "classes": [[0, 1, 2]]}', "--k", "inf"]
    )
    assert codigo == SALIDA_NEGATIVA
    datos = _salida(capsys)
    assert datos["valida"] is False
    assert sorted(datos["clases"][0]["ciclo"]) == [0, 1, 2]


def test_validate_clase_vacia_es_resultado_negativo(capsys):
    codigo = ejecutar(
        ["validate", "--graph", "B?", "--coloring", '{"t": 3, "classes": [[0, 1], [2], []]}', "--k", "inf"]
    )
    assert codigo == SALIDA_NEGATIVA
    datos = _salida(capsys)
    assert datos["equitativa"] is False
    assert datos["tamanos"] == [2, 1, 0]


def test_validate_desde_archivos(tmp_path, capsys):
    grafo = tmp_path / "p4.g6"
    grafo.write_text("Ch\n", encoding="utf-8")
    coloracion = tmp_path / "c.json"
    coloracion.write_text('{"t": 2, "classes": [[0, 1], [2, 3]]}', encoding="utf-8")
    assert ejecutar(["validate", "--graph", str(grafo), "--coloring", str(coloracion), "--k", "1"]) == SALIDA_OK
    assert _salida(capsys)["k"] == "1"


def test_solve_con_testigo(capsys):
    assert ejecutar(["solve", "--graph", "C~", "--t", "2", "--k", "1", "--witness"]) == SALIDA_OK
    datos = _salida(capsys)
    assert datos["feasible"] is True
    assert datos["witness"]["t"] == 2


def test_graph6_mal_formado_sale_con_uso(capsys):
    assert ejecutar(["strong", "--graph", "C~~", "--k", "inf"]) == SALIDA_USO
    err = capsys.readouterr().err
    assert err.startswith("arboricidad: error:")
    assert "byte 2" in err


def test_cota_invalida(capsys):
    assert ejecutar(["strong", "--graph", "C~", "--k", "-3"]) == SALIDA_USO
    assert ejecutar(["strong", "--graph", "C~", "--k", "mucho"]) == SALIDA_USO


def test_theorems_concuerda_en_k4(capsys):
    assert ejecutar(["theorems", "--graph", "C~", "--k", "2"]) == SALIDA_OK
    assert _salida(capsys)["concuerda"] is True


def test_construct_rueda(capsys):
    assert ejecutar(["construct", "--family", "wheel", "5", "--q", "3", "--k", "2"]) == SALIDA_OK
    datos = _salida(capsys)
    assert datos["coloring"] == {"t": 3, "classes": [[0, 3], [1, 4], [2]]}


def test_construct_bipartito_sin_clase_mixta(capsys):
    # 13 vértices en 4 clases de 3 o 4: solo caben clases de un lado
    assert ejecutar(["construct", "--family", "bipartite", "6", "1", "--q", "4"]) == SALIDA_OK
    datos = _salida(capsys)
    assert datos["coloring"]["t"] == 4
    assert datos["coloring"]["classes"] == [[0, 1, 2], [3, 4, 5], [6, 7, 8, 9], [10, 11, 12]]


def test_construct_aridad_incorrecta(capsys):
    assert ejecutar(["construct", "--family", "wheel", "5", "6", "--q", "3"]) == SALIDA_USO


def test_survey_orden_tres(tmp_path, capsys):
    destino = tmp_path / "reportes" / "sondeo.json"
    codigo = ejecutar(["survey", "--order", "3", "--k", "1,inf", "--out", str(destino)])
    assert codigo == SALIDA_OK
    datos = _salida(capsys)
    assert datos["parameters"]["graphs"] == 8
    assert datos["parameters"]["k"] == ["1", "inf"]
    assert "timing" not in datos
    assert json.loads(destino.read_text(encoding="utf-8")) == datos


def test_survey_csv_y_modo_report(tmp_path, capsys):
    destino = tmp_path / "sondeo.csv"
    codigo = ejecutar(
        ["survey", "--order", "4", "--k", "inf", "--check", "thm3_3", "--mode", "report", "--out", str(destino)]
    )
    assert codigo == SALIDA_OK
    datos = _salida(capsys)
    assert all(c["mode"] == "report" for c in datos["counterexamples"])
    lineas = destino.read_text(encoding="utf-8").splitlines()
    assert lineas[0] == "check,k,graph6,expected,observed,mode"
    assert len(lineas) == 1 + len(datos["counterexamples"])


def test_survey_muestra_requiere_orden(tmp_path, capsys):
    archivo = tmp_path / "g.g6"
    archivo.write_text("C~\n", encoding="utf-8")
    assert ejecutar(["survey", "--in", str(archivo), "--sample", "5"]) == SALIDA_USO
    assert "--sample" in capsys.readouterr().err


def test_survey_muestra_con_casi_completos(capsys):
    codigo = ejecutar(
        ["survey", "--order", "5", "--sample", "6", "--seed", "1", "--near-complete", "--check", "prop3_1", "--tiempos"]
    )
    assert codigo == SALIDA_OK
    datos = _salida(capsys)
    assert datos["parameters"]["graphs"] == 9
    assert "timing" in datos


def test_survey_chequeo_desconocido(capsys):
    assert ejecutar(["survey", "--order", "3", "--check", "thm9_9"]) == SALIDA_USO


def test_survey_archivo_con_linea_mala(tmp_path, capsys):
    archivo = tmp_path / "g.g6"
    archivo.write_text("C~\nCh\nC!\n", encoding="utf-8")
    assert ejecutar(["survey", "--in", str(archivo)]) == SALIDA_USO
    assert "línea 3" in capsys.readouterr().err


def test_ng_orden_cuatro(capsys):
    assert ejecutar(["ng", "--order", "4", "--k", "1"]) == SALIDA_OK
    fila = _salida(capsys)["rows"][0]
    assert fila["max_sum"] == 4
    assert "Ch" in fila["max_sum_graphs"]


@pytest.mark.parametrize("argv", [[], ["desconocido"], ["strong", "--graph", "C~"]])
def test_errores_de_uso(argv, capsys):
    assert ejecutar(argv) == SALIDA_USO


def test_configuracion_inexistente(capsys):
    assert ejecutar(["--config", "/no/existe.yaml", "strong", "--graph", "C~", "--k", "1"]) == SALIDA_USO
