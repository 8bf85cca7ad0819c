#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Orbifolds - Invariantes exactos de orbifolds planas.

Herramienta de línea de comandos que calcula números de Chern orbifold de
configuraciones pesadas de curvas en el plano proyectivo, las levanta por
cubrimientos de Kummer y comprueba órdenes de grupos fundamentales orbifold.

Estructura modular:
    - numerics/: Racionales exactos con INF
    - configuration/: Modelo de datos, formato de documento y familias
    - invariants/: Órdenes locales, números de Chern, clasificación y tablas
    - coverings/: Cubrimientos de Kummer y construcciones iteradas
    - groups/: Presentaciones, Todd–Coxeter y abelianización
    - config/: Ajustes de cálculo y de salida
    - ui/: Renderizado de resultados y mensajes de consola
    - app/: Coordinador de la línea de comandos y verificación

Python: 3.10+
"""

import sys

# ============================================================================
# IMPORTS - Módulos del proyecto
# ============================================================================
from errors import OrbifoldError
from config.settings import OrbifoldSettings
from app.orbifold_app import OrbifoldApp


# ============================================================================
# PUNTO DE ENTRADA PRINCIPAL
# ============================================================================
def main(argv=None):
    """
    Punto de entrada de la aplicación.

    Manejo de errores:
        - OrbifoldError: mensaje "✗ ..." en stderr y el código de la excepción
        - KeyboardInterrupt (Ctrl+C): cierre por el usuario (código 130)
        - Exception general: traceback completo y código 1

    Ejecución:
        python3 main.py verify
        python3 main.py invariants ejemplo.conf --format json

    Returns:
        int: Código de salida
    """
    try:
        settings = OrbifoldSettings()
        app = OrbifoldApp(settings)
        return app.run(argv)
    except KeyboardInterrupt:
        print("\nInterrumpido por el usuario", file=sys.stderr)
        return 130
    except OrbifoldError as e:
        print(f"✗ {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"✗ {e}", file=sys.stderr)
        return 1
    except Exception as e:
        # Error inesperado - mostrar información completa
        print(f"\nError: {e}", file=sys.stderr)
        import traceback
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
