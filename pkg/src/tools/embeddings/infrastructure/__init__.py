"""Fixed matrices of the explicit constructions."""
