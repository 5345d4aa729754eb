"""
API v1 - request and report schemas
"""
