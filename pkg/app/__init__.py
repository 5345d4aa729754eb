"""
hodge-games - Decomposition and dynamics of differential games
"""

__version__ = "0.1.0"
__author__ = "hodge-games developers"
