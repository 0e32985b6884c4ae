"""Spherical Arcs - Tests Package"""
