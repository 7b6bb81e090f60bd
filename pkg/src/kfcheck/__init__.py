"""Validation engine for the KF conceptual-modelling metamodel."""

__version__ = "0.1.0"
