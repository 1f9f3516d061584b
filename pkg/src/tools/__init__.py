"""Tool packages: one per concern, each split into domain / infrastructure / application."""
