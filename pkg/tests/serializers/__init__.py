"""
Tests for serializers module.
"""
