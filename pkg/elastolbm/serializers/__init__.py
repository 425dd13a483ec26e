"""
Writers and readers of run artifacts
"""
