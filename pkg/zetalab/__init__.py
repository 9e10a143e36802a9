"""
ZetaLab : valeurs exactes des fonctions zêta multiples aux entiers négatifs
"""

__version__ = "0.1.0"
