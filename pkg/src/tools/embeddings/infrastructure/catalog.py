"""Fixed integer matrices used by the explicit constructions.

L2 has ᵗL2·L2 = 2·E8, so its columns realise 2·E8 inside ⟨1⟩⁸.
G2 and G3 satisfy ᵗG2·G2 = 2·I8 and ᵗG3·G3 = 3·I8; composing them with L2
gives the degree 4 and 6 versions.
"""
from src.tools.lattice_core.infrastructure.matrix_ops import block_diagonal, matmul, object_array, to_rows

L2_ROWS = (
    (1, 2, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 2, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 2, 1, 0),
    (0, 0, 0, 0, 1, 0, 0, 2),
    (0, 0, 1, 0, -1, 0, 1, 0),
    (1, 0, -1, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 0, -1, 0),
    (-1, 0, 0, 0, 0, 0, 0, 0),
)

G2_BLOCK = (
    (1, 1),
    (1, -1),
)

G3_BLOCK = (
    (1, 1, 1, 0),
    (1, -1, 0, 1),
    (-1, 0, 1, 1),
    (0, 1, -1, 1),
)


def g2_matrix():
    block = object_array(G2_BLOCK, 2, 2)
    return block_diagonal(block, block, block, block)


def g3_matrix():
    block = object_array(G3_BLOCK, 4, 4)
    return block_diagonal(block, block)


def l_rows(d: int):
    """Rows of L_d for d in {2, 4, 6}: L2, G2·L2 or G3·L2."""
    l2 = object_array(L2_ROWS, 8, 8)
    if d == 2:
        return to_rows(l2)
    if d == 4:
        return to_rows(matmul(g2_matrix(), l2))
    if d == 6:
        return to_rows(matmul(g3_matrix(), l2))
    raise ValueError(f"No L matrix of degree {d}")
