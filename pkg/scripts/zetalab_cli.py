#!/usr/bin/env python3
"""
Point d'entrée de la ligne de commande ZetaLab

Usage:
    python scripts/zetalab_cli.py mzv reduce -m 0,0 --json
    python scripts/zetalab_cli.py verify prop1 --max-m 30
"""

import sys
from pathlib import Path

# Import du module
sys.path.insert(0, str(Path(__file__).parent.parent))
from zetalab.cli import main


if __name__ == "__main__":
    sys.exit(main())
