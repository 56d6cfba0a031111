"""
This file marks tests as a Python package.
"""
