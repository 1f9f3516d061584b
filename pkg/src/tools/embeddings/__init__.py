"""Embedding certificates, their algebra and the explicit constructions."""
