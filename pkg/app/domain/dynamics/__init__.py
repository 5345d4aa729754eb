"""
Dynamics domain: the gradient flow x' = Du and its diagnostics
"""
