"""
Test suite for the directed metric dimension toolkit.
"""
