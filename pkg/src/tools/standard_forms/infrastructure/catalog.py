"""Gram matrices of the building-block lattices."""

HYPERBOLIC_ROWS = (
    (0, 1),
    (1, 0),
)

# Diagonal 2; chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
E8_ROWS = (
    (2, 1, 0, 0, 0, 0, 0, 0),
    (1, 2, 1, 0, 0, 0, 0, 0),
    (0, 1, 2, 1, 0, 0, 0, 0),
    (0, 0, 1, 2, 1, 0, 0, 0),
    (0, 0, 0, 1, 2, 1, 0, 1),
    (0, 0, 0, 0, 1, 2, 1, 0),
    (0, 0, 0, 0, 0, 1, 2, 0),
    (0, 0, 0, 0, 1, 0, 0, 2),
)

E8_RANK = 8
