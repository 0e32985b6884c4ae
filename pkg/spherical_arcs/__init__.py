"""Spherical Arcs - arc-diagram model of negative Calabi-Yau categories"""
__version__ = "0.1.0"
