"""
Test Package
"""
