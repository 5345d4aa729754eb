"""
Game domain: differential games and their simultaneous gradient
"""
