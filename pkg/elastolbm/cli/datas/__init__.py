"""
Preset data for the CLI commands
"""
