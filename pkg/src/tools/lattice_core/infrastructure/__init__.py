"""Lattice core infrastructure: exact elimination and matrix helpers."""
