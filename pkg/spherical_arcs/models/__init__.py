"""Spherical Arcs - Models Package"""
from spherical_arcs.models.schemas import *
