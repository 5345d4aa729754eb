"""
Grid domain: periodic-box lattices and discrete exterior calculus
"""
