"""
Configuration Package
=====================

Default numerical settings, unit conversions and runtime (worker) settings.
"""
