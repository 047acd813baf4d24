# utils/encoding.py
"""
Utilidades de codificación de 6 bits del formato graph6.

Cada byte imprimible lleva 6 bits: valor = byte - 63, con bytes válidos
entre 63 ('?') y 126 ('~').
"""

from typing import Iterable, List, Tuple

from utils.excepciones import ErrorGraph6

DESPLAZAMIENTO = 63
BYTE_MIN = 63
BYTE_MAX = 126


def codificar_n(n: int) -> bytes:
    """
    Codifica el orden N(n) del formato graph6.

    Args:
        n: Número de vértices (0 <= n <= 68719476735).

    Returns:
        1, 4 u 8 bytes según el tamaño de n.
    """
    if n < 0:
        raise ErrorGraph6(f"Orden negativo: {n}")
    if n <= 62:
        return bytes([n + DESPLAZAMIENTO])
    if n <= 258047:
        return b"~" + bytes(
            ((n >> desp) & 0x3F) + DESPLAZAMIENTO for desp in (12, 6, 0)
        )
    if n <= 68719476735:
        return b"~~" + bytes(
            ((n >> desp) & 0x3F) + DESPLAZAMIENTO for desp in (30, 24, 18, 12, 6, 0)
        )
    raise ErrorGraph6(f"Orden demasiado grande para graph6: {n}")


def decodificar_n(datos: bytes, inicio: int = 0) -> Tuple[int, int]:
    """
    Decodifica N(n) a partir de la posición indicada.

    Returns:
        Tupla (n, posición del primer byte tras la cabecera).

    Raises:
        ErrorGraph6: Cabecera truncada o con bytes no imprimibles.
    """
    if inicio >= len(datos):
        raise ErrorGraph6("Falta la cabecera de longitud", desplazamiento=inicio)

    verificar_imprimible(datos[inicio], inicio)
    if datos[inicio] != ord("~"):
        return datos[inicio] - DESPLAZAMIENTO, inicio + 1

    if inicio + 1 < len(datos) and datos[inicio + 1] == ord("~"):
        ancho, base = 6, inicio + 2
    else:
        ancho, base = 3, inicio + 1

    if base + ancho > len(datos):
        raise ErrorGraph6("Cabecera de longitud truncada", desplazamiento=len(datos))

    n = 0
    for i in range(base, base + ancho):
        verificar_imprimible(datos[i], i)
        n = (n << 6) | (datos[i] - DESPLAZAMIENTO)
    return n, base + ancho


def verificar_imprimible(byte: int, posicion: int) -> None:
    """Lanza ErrorGraph6 si el byte está fuera del rango 63..126."""
    if not BYTE_MIN <= byte <= BYTE_MAX:
        raise ErrorGraph6(
            f"Byte no válido en graph6: 0x{byte:02x}", desplazamiento=posicion
        )


def empaquetar_bits(bits: Iterable[int]) -> bytes:
    """Agrupa bits de 6 en 6 (rellenando con ceros a la derecha) en bytes imprimibles."""
    salida: List[int] = []
    acumulado = 0
    cantidad = 0
    for bit in bits:
        acumulado = (acumulado << 1) | (1 if bit else 0)
        cantidad += 1
        if cantidad == 6:
            salida.append(acumulado + DESPLAZAMIENTO)
            acumulado = 0
            cantidad = 0
    if cantidad:
        salida.append((acumulado << (6 - cantidad)) + DESPLAZAMIENTO)
    return bytes(salida)


def desempaquetar_bits(datos: bytes, inicio: int, total_bits: int) -> List[int]:
    """
    Extrae exactamente total_bits bits a partir de datos[inicio:].

    Raises:
        ErrorGraph6: Datos insuficientes, bytes sobrantes o no imprimibles.
    """
    necesarios = (total_bits + 5) // 6
    disponibles = len(datos) - inicio
    if disponibles < necesarios:
        raise ErrorGraph6(
            f"Faltan {necesarios - disponibles} bytes de adyacencia",
            desplazamiento=len(datos),
        )
    if disponibles > necesarios:
        raise ErrorGraph6(
            "Bytes sobrantes tras la matriz de adyacencia",
            desplazamiento=inicio + necesarios,
        )

    bits: List[int] = []
    for i in range(inicio, inicio + necesarios):
        verificar_imprimible(datos[i], i)
        valor = datos[i] - DESPLAZAMIENTO
        for desp in range(5, -1, -1):
            bits.append((valor >> desp) & 1)
    return bits[:total_bits]
