# main.py
import sys

from ui.linea_comandos import ejecutar


def main():
    # stdout lleva JSON con caracteres como ∞ y ≡
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    if hasattr(sys.stderr, "reconfigure"):
        sys.stderr.reconfigure(encoding="utf-8")
    return ejecutar(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
