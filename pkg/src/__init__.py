"""
chromaseg source package.
"""
