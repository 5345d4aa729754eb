"""
Expression domain: symbolic utilities and their exact derivatives
"""
