"""
This file marks tests.utils as a Python package.
""" 