"""
This file marks tests.commands as a Python package.
"""
