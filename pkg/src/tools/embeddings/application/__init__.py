"""Embeddings application layer (import submodules directly)."""
