# tests/conftest.py
import pytest

from config import Configuracion
from core.grafo import construir_familia
from core.oraculo import OraculoArboricidad


@pytest.fixture(autouse=True)
def configuracion_por_defecto():
    """Cada prueba parte de config/config.yaml aunque otra haya cargado un archivo distinto."""
    Configuracion.restablecer()
    yield
    Configuracion.restablecer()

@pytest.fixture
def oraculo():
    return OraculoArboricidad()

@pytest.fixture
def p4():
    return construir_familia("camino", 4)

@pytest.fixture
def c5():
    return construir_familia("ciclo", 5)

@pytest.fixture
def k4():
    return construir_familia("completo", 4)
