"""Oracle application layer (import submodules directly)."""
