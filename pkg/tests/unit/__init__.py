"""
Unit Tests Package
"""
