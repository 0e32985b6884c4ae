"""Spherical Arcs - Workers Package"""
