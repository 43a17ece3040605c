"""Equational verification workbench for finite strict double categories."""

__version__ = "0.1.0"
