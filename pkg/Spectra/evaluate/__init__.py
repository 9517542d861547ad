"""
    evaluate
"""
