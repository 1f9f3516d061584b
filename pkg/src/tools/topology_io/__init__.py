"""Framed-link input, named presets and payload parsing."""
