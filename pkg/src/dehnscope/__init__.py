"""Dehn functions of Bestvina-Brady groups and the supporting word and diagram calculus."""

__version__ = "0.1.0"
