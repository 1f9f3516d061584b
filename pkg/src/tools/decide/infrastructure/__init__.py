"""Degree table rows and the summand allocator."""
