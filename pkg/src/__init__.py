"""Lattice-covers: exact intersection-form embeddings and covering degrees."""
