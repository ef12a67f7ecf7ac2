"""Hypergraph expansions of fans: constructions, containment, decompositions
and small exact Turán searches."""

__version__ = "0.1.0"
