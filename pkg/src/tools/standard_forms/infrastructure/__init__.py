"""Fixed Gram matrices of the standard lattices."""
