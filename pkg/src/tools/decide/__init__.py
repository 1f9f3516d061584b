"""Degree table, covering consequences and the embedding assembly driver."""
