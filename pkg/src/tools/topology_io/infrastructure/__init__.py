"""Preset registry, payload models and the payload loader."""
