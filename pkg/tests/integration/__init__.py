"""
Integration Tests Package
"""
