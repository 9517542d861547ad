"""
    config
"""
