"""
Classification domain: game taxonomy and spectrum records
"""
