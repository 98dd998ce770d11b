"""
Test package for falsilab.
"""
