"""Spherical Arcs - Command Modules (each exposes register(subparsers, parents))"""
