# ui/linea_comandos.py
"""
Interfaz de línea de comandos.

Subcomandos: validate, solve, strong, theorems, construct, sweep, survey, ng.
El JSON de resultados va a stdout (claves ordenadas) y los diagnósticos a
stderr. Códigos de salida: 0 éxito, 1 resultado negativo (coloración
inválida, contraejemplo afirmado, hallazgo), 2 error de uso o de entrada.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from config import Configuracion
from core.coloracion import Coloracion, validar_coloracion_arborea
from core.experimentos import (
    CHEQUEOS,
    barrido_nordhaus_gaddum,
    grafos_casi_completos,
    muestrear_grafos,
    sondear,
)
from core.familias import (
    barrido_construcciones,
    barrido_proposicion_bipartita,
    barrido_teorema_bipartito,
    construir_coloracion_bipartita,
    construir_coloracion_rueda,
)
from core.gestor_reportes import GestorReportes
from core.grafo import CotaGrado, Grafo, leer_graph6, parsear_graph6
from core.oraculo import OraculoArboricidad
from core.teoremas import validar_cruzado
from utils.excepciones import ConstruccionNoAplicable, ErrorArboricidad, ErrorParametro
from utils.logger import configurar_logging_global, obtener_logger

SALIDA_OK = 0
SALIDA_NEGATIVA = 1
SALIDA_USO = 2

logger = obtener_logger(__name__)


def _emitir(datos: Any) -> None:
    sys.stdout.write(json.dumps(datos, sort_keys=True, ensure_ascii=False))
    sys.stdout.write("\n")


def _cota(texto: str) -> CotaGrado:
    try:
        return CotaGrado.parsear(texto)
    except ErrorParametro as e:
        raise argparse.ArgumentTypeError(str(e))


def _lista_cotas(texto: str) -> List[CotaGrado]:
    return [_cota(parte) for parte in texto.split(",") if parte.strip()]


def _lista_chequeos(texto: str) -> List[str]:
    chequeos = [c.strip() for c in texto.split(",") if c.strip()]
    desconocidos = [c for c in chequeos if c not in CHEQUEOS]
    if desconocidos:
        raise argparse.ArgumentTypeError(
            f"chequeos desconocidos {desconocidos}; válidos: {', '.join(CHEQUEOS)}"
        )
    return chequeos


def _leer_archivo_graph6(ruta: Path) -> List[Grafo]:
    with open(ruta, "rb") as f:
        return list(leer_graph6(f))


def _cargar_grafo(valor: str) -> Grafo:
    """Un grafo graph6 en línea, o un archivo que contenga exactamente uno."""
    ruta = Path(valor)
    if ruta.is_file():
        grafos = _leer_archivo_graph6(ruta)
        if len(grafos) != 1:
            raise ErrorParametro(f"--graph: {ruta} contiene {len(grafos)} grafos; se esperaba 1")
        return grafos[0]
    return parsear_graph6(valor)


def _cargar_coloracion(valor: str, n: int) -> Coloracion:
    ruta = Path(valor)
    texto = ruta.read_text(encoding="utf-8") if ruta.is_file() else valor
    return Coloracion.desde_json(texto, n=n)


def _guardar(args: argparse.Namespace, datos: Dict[str, Any], contraejemplos=None) -> None:
    if getattr(args, "out", None):
        GestorReportes().guardar_reporte(datos, args.out, contraejemplos)


def _cmd_validate(args: argparse.Namespace) -> int:
    g = _cargar_grafo(args.graph)
    coloracion = _cargar_coloracion(args.coloring, g.n)
    reporte = validar_coloracion_arborea(g, coloracion, args.k)
    datos = reporte.a_dict()
    datos["k"] = str(args.k)
    _emitir(datos)
    return SALIDA_OK if reporte.valida else SALIDA_NEGATIVA


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _cargar_grafo(args.graph)
    testigo = OraculoArboricidad().existe_coloracion_equitativa(g, args.t, args.k)
    datos: Dict[str, Any] = {"n": g.n, "t": args.t, "k": str(args.k), "feasible": testigo is not None}
    if args.witness and testigo is not None:
        datos["witness"] = testigo.a_dict()
    _emitir(datos)
    return SALIDA_OK


def _cmd_strong(args: argparse.Namespace) -> int:
    g = _cargar_grafo(args.graph)
    oraculo = OraculoArboricidad()
    _emitir(
        {
            "n": g.n,
            "k": str(args.k),
            "va_equitable": oraculo.arboricidad_equitativa(g, args.k),
            "va_strong": oraculo.arboricidad_equitativa_fuerte(g, args.k),
            "profile": oraculo.perfil_factibilidad(g, args.k),
        }
    )
    return SALIDA_OK


def _cmd_theorems(args: argparse.Namespace) -> int:
    reporte = validar_cruzado(_cargar_grafo(args.graph), args.k)
    _emitir(reporte.a_dict())
    return SALIDA_OK if reporte.concuerda else SALIDA_NEGATIVA


def _cmd_construct(args: argparse.Namespace) -> int:
    aridad = {"bipartite": 2, "wheel": 1}[args.family]
    if len(args.params) != aridad:
        raise ErrorParametro(
            f"--family {args.family} requiere {aridad} parámetro(s), recibió {len(args.params)}"
        )
    try:
        if args.family == "bipartite":
            coloracion = construir_coloracion_bipartita(*args.params, args.q, args.k)
        else:
            coloracion = construir_coloracion_rueda(args.params[0], args.q, args.k)
    except ConstruccionNoAplicable as e:
        logger.warning(str(e))
        _emitir({"finding": e.hallazgo})
        return SALIDA_NEGATIVA
    _emitir({"coloring": coloracion.a_dict(), "k": str(args.k)})
    return SALIDA_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.which == "bipartite-theorem":
        filas = barrido_teorema_bipartito(args.n_max)
        negativo = not all(f["holds"] for f in filas)
    elif args.which == "bipartite-proposition":
        filas = barrido_proposicion_bipartita(range(1, args.t_max + 1))
        negativo = not all(f["equal"] for f in filas)
    else:
        filas = barrido_construcciones(args.n_max)
        negativo = any(f["verdict"] != "valid" for f in filas)
    datos = {"sweep": args.which, "rows": filas}
    if args.out and Path(args.out).suffix.lower() == ".jsonl":
        GestorReportes().guardar_jsonl(filas, args.out)
    else:
        _guardar(args, datos)
    _emitir(datos)
    return SALIDA_NEGATIVA if negativo else SALIDA_OK


def _fuente_grafos(args: argparse.Namespace) -> Dict[str, Any]:
    """Argumentos de fuente para sondear(): orden completo, muestra o archivo."""
    if args.input:
        return {"grafos": _leer_archivo_graph6(Path(args.input))}
    if getattr(args, "sample", None):
        grafos = muestrear_grafos(args.order, args.sample, args.seed if args.seed is not None else Configuracion().experimentos.semilla)
        if args.near_complete:
            grafos.extend(grafos_casi_completos(args.order).values())
        return {"grafos": grafos}
    return {"orden": args.order}


def _cmd_survey(args: argparse.Namespace) -> int:
    reporte = sondear(
        **_fuente_grafos(args),
        ks=args.k,
        chequeos=args.check,
        trabajos=args.jobs,
        modo=args.mode,
    )
    datos = reporte.a_dict(incluir_tiempos=args.tiempos)
    _guardar(args, datos, reporte.contraejemplos)
    _emitir(datos)
    return SALIDA_NEGATIVA if reporte.fallos_afirmados else SALIDA_OK


def _cmd_ng(args: argparse.Namespace) -> int:
    datos = barrido_nordhaus_gaddum(**_fuente_grafos(args), ks=args.k, trabajos=args.jobs)
    _guardar(args, datos)
    _emitir(datos)
    return SALIDA_NEGATIVA if any(f["violations"] for f in datos["rows"]) else SALIDA_OK


def _agregar_fuente(sub: argparse.ArgumentParser, muestreo: bool = False) -> None:
    fuente = sub.add_mutually_exclusive_group(required=True)
    fuente.add_argument("--order", type=int, help="todos los grafos etiquetados de este orden")
    fuente.add_argument("--in", dest="input", help="archivo graph6, un grafo por línea")
    if muestreo:
        sub.add_argument("--sample", type=int, help="con --order: tamaño de una muestra aleatoria")
        sub.add_argument("--seed", type=int, help="semilla de la muestra (por defecto, la de config)")
        sub.add_argument(
            "--near-complete",
            action="store_true",
            help="con --sample: añade K_n-e, K_n-2e y K_n-P3",
        )
    sub.add_argument("--jobs", type=int, help="procesos en paralelo")
    sub.add_argument("--out", help="archivo de salida (.json, .csv o .jsonl)")


def construir_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arboricidad",
        description="Coloraciones arbóreas equitativas: validación, cálculo exacto y sondeos.",
    )
    parser.add_argument("--config", help="ruta a un config.yaml alternativo")
    parser.add_argument("-v", "--verbose", action="store_true", help="logging INFO en stderr")
    subs = parser.add_subparsers(dest="comando", required=True)

    sub = subs.add_parser("validate", help="valida una coloración contra la definición")
    sub.add_argument("--graph", required=True, help="graph6 o archivo con un grafo")
    sub.add_argument("--coloring", required=True, help='JSON {"t": ..., "classes": [...]} o archivo')
    sub.add_argument("--k", type=_cota, required=True, help="entero >= 0 o 'inf'")
    sub.set_defaults(funcion=_cmd_validate)

    sub = subs.add_parser("solve", help="decide si existe una (t,k)-coloración equitativa")
    sub.add_argument("--graph", required=True)
    sub.add_argument("--t", type=int, required=True)
    sub.add_argument("--k", type=_cota, required=True)
    sub.add_argument("--witness", action="store_true", help="incluye la coloración testigo")
    sub.set_defaults(funcion=_cmd_solve)

    sub = subs.add_parser("strong", help="va_k^=, va_k^≡ y perfil de factibilidad")
    sub.add_argument("--graph", required=True)
    sub.add_argument("--k", type=_cota, required=True)
    sub.set_defaults(funcion=_cmd_strong)

    sub = subs.add_parser("theorems", help="contrasta los predicados con el oráculo")
    sub.add_argument("--graph", required=True)
    sub.add_argument("--k", type=_cota, required=True)
    sub.set_defaults(funcion=_cmd_theorems)

    sub = subs.add_parser("construct", help="coloración constructiva o hallazgo")
    sub.add_argument("--family", choices=["bipartite", "wheel"], required=True)
    sub.add_argument("params", type=int, nargs="+", help="bipartite: n ell; wheel: n")
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--k", type=_cota, default=CotaGrado.finita(2))
    sub.set_defaults(funcion=_cmd_construct)

    sub = subs.add_parser("sweep", help="barridos de las familias bipartitas y construcciones")
    sub.add_argument(
        "which", choices=["bipartite-theorem", "bipartite-proposition", "constructions"]
    )
    sub.add_argument("--n-max", type=int, default=8)
    sub.add_argument("--t-max", type=int, default=3)
    sub.add_argument("--out")
    sub.set_defaults(funcion=_cmd_sweep)

    sub = subs.add_parser("survey", help="chequeos sobre una colección de grafos")
    _agregar_fuente(sub, muestreo=True)
    sub.add_argument("--k", type=_lista_cotas, default=[CotaGrado.ilimitada()], help="p. ej. 1,2,inf")
    sub.add_argument("--check", type=_lista_chequeos, default=list(CHEQUEOS))
    sub.add_argument("--mode", choices=["assert", "report"], default="assert")
    sub.add_argument("--tiempos", action="store_true", help="incluye los tiempos en el reporte")
    sub.set_defaults(funcion=_cmd_survey)

    sub = subs.add_parser("ng", help="barrido de Nordhaus–Gaddum")
    _agregar_fuente(sub)
    sub.add_argument("--k", type=_lista_cotas, default=[CotaGrado.finita(1)])
    sub.set_defaults(funcion=_cmd_ng)
    return parser


def ejecutar(argv: Optional[Sequence[str]] = None) -> int:
    """Punto de entrada de la CLI; devuelve el código de salida."""
    parser = construir_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return SALIDA_OK if e.code == 0 else SALIDA_USO

    if getattr(args, "sample", None) and args.order is None:
        parser.print_usage(sys.stderr)
        sys.stderr.write("arboricidad: error: --sample requiere --order\n")
        return SALIDA_USO

    try:
        cfg = Configuracion(args.config) if args.config else Configuracion()
        configurar_logging_global(cfg, "INFO" if args.verbose else None)
        return args.funcion(args)
    except ErrorArboricidad as e:
        sys.stderr.write(f"arboricidad: error: {e}\n")
        return SALIDA_USO
    except OSError as e:
        sys.stderr.write(f"arboricidad: error: {e}\n")
        return SALIDA_USO
