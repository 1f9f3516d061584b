"""Standard lattices and normal forms of unimodular forms."""
