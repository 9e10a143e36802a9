import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

# Import du package depuis la racine du dépôt
sys.path.insert(0, str(Path(__file__).parent.parent))
