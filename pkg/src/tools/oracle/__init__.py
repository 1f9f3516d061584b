"""Brute-force search used to cross-check the explicit constructions."""
