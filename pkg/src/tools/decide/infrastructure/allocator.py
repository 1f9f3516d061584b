"""
Summand allocation between Serre normal forms.

The source normal form is cut into orthogonal pieces (diagonal generators,
H blocks, E8 blocks) and each piece is sent into free target summands by
one of the explicit constructions. Target capacity:

- an H block hosts one (+, -) generator pair, one single generator, or
  one image of an H block; eight H blocks together host one E8 image
- a ±E8 block hosts up to eight same-sign generators through a frame, or
  one image of an E8 block
- ⟨±1⟩ slots host generators and halves of H blocks

Placement is greedy in a fixed order so the resulting matrix is
reproducible. Any shortfall raises AllocationInfeasibleError.
"""
import logging
from typing import Callable, Dict, List, Sequence

import numpy as np

from src.tools.embeddings.application import constructors as build
from src.tools.embeddings.application.algebra import (
    identity_embedding,
    negate_adapter,
    restrict,
    verify,
)
from src.tools.embeddings.domain.models import Embedding
from src.tools.lattice_core.domain.models import FormInvariants, GramMatrix
from src.tools.lattice_core.infrastructure.matrix_ops import to_rows, zeros
from src.tools.standard_forms.application.services import (
    diag_form,
    serre_layout,
    serre_normal_form,
)
from src.tools.standard_forms.domain.models import Sign
from ..domain.exceptions import AllocationInfeasibleError

logger = logging.getLogger(__name__)


class EmbeddingAssembler:
    """
    Collects pieces into one certificate between two fixed forms.

    Each piece must match the principal submatrices of the source and
    target on the indices it is placed at, and no index may be used twice.
    """

    def __init__(self, source: GramMatrix, target: GramMatrix, degree: int):
        self.source = source
        self.target = target
        self.degree = degree
        self.matrix = zeros(target.rank, source.rank)
        self._used_source: set = set()
        self._used_target: set = set()
        self.pieces = 0

    def place(self, piece: Embedding, source_indices: Sequence[int], target_indices: Sequence[int]) -> None:
        src = list(source_indices)
        tgt = list(target_indices)
        if piece.degree != self.degree:
            raise AllocationInfeasibleError(
                f"Piece of degree {piece.degree} cannot be placed in a degree-{self.degree} embedding"
            )
        if len(src) != piece.source.rank or len(tgt) != piece.target.rank:
            raise AllocationInfeasibleError(
                f"Piece of shape {piece.shape} placed on {len(tgt)} target and {len(src)} source indices"
            )
        if self._used_source.intersection(src) or self._used_target.intersection(tgt):
            raise AllocationInfeasibleError(f"Indices already in use: source {src}, target {tgt}")
        if self.source.submatrix(src) != piece.source:
            raise AllocationInfeasibleError(f"Source summand at {src} does not match the piece")
        if self.target.submatrix(tgt) != piece.target:
            raise AllocationInfeasibleError(f"Target summand at {tgt} does not match the piece")

        if src and tgt:
            self.matrix[np.ix_(tgt, src)] = piece.array
        self._used_source.update(src)
        self._used_target.update(tgt)
        self.pieces += 1
        logger.debug(f"Placed piece {piece.shape} at source {src} -> target {tgt}")

    def build(self) -> Embedding:
        missing = sorted(set(range(self.source.rank)) - self._used_source)
        if missing:
            raise AllocationInfeasibleError(f"Source generators {missing} were not placed")
        e = Embedding(
            degree=self.degree,
            source=self.source,
            target=self.target,
            matrix=to_rows(self.matrix),
        )
        if not verify(e):
            raise AllocationInfeasibleError("Assembled matrix fails the embedding identity")
        return e


class SlotPool:
    """Ordered pool of free target summands of one kind."""

    def __init__(self, name: str, items: Sequence):
        self.name = name
        self.items = list(items)

    def __len__(self) -> int:
        return len(self.items)

    def take(self, count: int = 1) -> List:
        if count > len(self.items):
            raise AllocationInfeasibleError(
                f"Need {count} free {self.name}, only {len(self.items)} left"
            )
        taken, self.items = self.items[:count], self.items[count:]
        return taken

    def take_one(self):
        return self.take(1)[0]


def _flatten(blocks) -> List[int]:
    return [i for block in blocks for i in block]


def _chunks(items: Sequence[int], size: int) -> List[List[int]]:
    return [list(items[i:i + size]) for i in range(0, len(items), size)]


class SummandAllocator:
    """Builds the certificate for one table row between two normal forms."""

    def __init__(self, source: FormInvariants, target: FormInvariants):
        self.source_invariants = source
        self.target_invariants = target
        self.source_layout = serre_layout(source)
        self.target_layout = serre_layout(target)
        self.source = serre_normal_form(source)
        self.target = serre_normal_form(target)
        self._handlers: Dict[int, Callable[[EmbeddingAssembler, int], None]] = {
            1: self._odd_into_odd_identity,
            2: self._odd_into_odd_five,
            3: self._odd_into_hyperbolic,
            4: self._odd_into_even_definite_part,
            5: self._hyperbolic_into_odd,
            6: self._even_into_odd,
            7: self._hyperbolic_into_even,
            8: self._even_into_even,
        }

    def allocate(self, row: int, degree: int) -> Embedding:
        """Certificate of degree ``degree`` built with the pieces of ``row``."""
        if row not in self._handlers:
            raise AllocationInfeasibleError(f"No table row {row}")
        assembler = EmbeddingAssembler(self.source, self.target, degree)
        self._handlers[row](assembler, degree)
        embedding = assembler.build()
        logger.info(
            f"Row {row}: assembled degree-{degree} embedding "
            f"{self.source_invariants} -> {self.target_invariants} from {assembler.pieces} piece(s)"
        )
        return embedding

    # -- helpers -------------------------------------------------------

    def _target_pools(self):
        layout = self.target_layout
        return (
            SlotPool("⟨+1⟩ slots", layout.positive_slots),
            SlotPool("⟨-1⟩ slots", layout.negative_slots),
            SlotPool("H blocks", layout.hyperbolic_blocks),
            SlotPool("E8 blocks", layout.e8_blocks),
        )

    # -- rows ----------------------------------------------------------

    def _odd_into_odd_identity(self, assembler: EmbeddingAssembler, degree: int) -> None:
        pos, neg, _, _ = self._target_pools()
        src_pos = list(self.source_layout.positive_slots)
        src_neg = list(self.source_layout.negative_slots)
        if src_pos:
            assembler.place(identity_embedding(diag_form(len(src_pos), 0)), src_pos, pos.take(len(src_pos)))
        if src_neg:
            assembler.place(identity_embedding(diag_form(0, len(src_neg))), src_neg, neg.take(len(src_neg)))

    def _odd_into_odd_five(self, assembler: EmbeddingAssembler, degree: int) -> None:
        pos, neg, _, _ = self._target_pools()
        leftovers = {}
        for sign, slots, pool in (
            (Sign.PLUS, self.source_layout.positive_slots, pos),
            (Sign.MINUS, self.source_layout.negative_slots, neg),
        ):
            pairs = _chunks(slots, 2)
            if pairs and len(pairs[-1]) == 1:
                leftovers[sign] = pairs.pop()[0]
            for pair in pairs:
                assembler.place(build.five_pair_same_sign(sign), pair, pool.take(2))

        if Sign.PLUS in leftovers and Sign.MINUS in leftovers:
            assembler.place(
                build.five_pair_mixed(),
                [leftovers[Sign.PLUS], leftovers[Sign.MINUS]],
                [pos.take_one(), neg.take_one()],
            )
            return
        for sign, slot in leftovers.items():
            own, other = (pos, neg) if sign is Sign.PLUS else (neg, pos)
            if len(other) >= 1 and len(own) >= 1:
                column = 0 if sign is Sign.PLUS else 1
                assembler.place(
                    restrict(build.five_pair_mixed(), [column]),
                    [slot],
                    [pos.take_one(), neg.take_one()],
                )
            else:
                assembler.place(restrict(build.five_pair_same_sign(sign), [0]), [slot], own.take(2))

    def _place_pairs_and_singles(self, assembler: EmbeddingAssembler, hyperbolic: SlotPool, k: int,
                                 spill_sign=None) -> Dict[Sign, List[int]]:
        """
        Opposite-sign pairs, then singles, into H blocks at degree 2k.

        Singles of ``spill_sign`` are placed last so that whatever does not
        fit can go elsewhere; they are returned instead of raising.
        """
        src_pos = list(self.source_layout.positive_slots)
        src_neg = list(self.source_layout.negative_slots)
        n_pairs = min(len(src_pos), len(src_neg), len(hyperbolic))
        for i in range(n_pairs):
            assembler.place(build.hyperbolic_pair(k), [src_pos[i], src_neg[i]], hyperbolic.take_one())
        singles = {Sign.PLUS: src_pos[n_pairs:], Sign.MINUS: src_neg[n_pairs:]}

        order = [Sign.PLUS, Sign.MINUS]
        if spill_sign is not None:
            order.sort(key=lambda s: s is spill_sign)
        remaining: Dict[Sign, List[int]] = {Sign.PLUS: [], Sign.MINUS: []}
        for sign in order:
            for slot in singles[sign]:
                if sign is spill_sign and not len(hyperbolic):
                    remaining[sign].append(slot)
                    continue
                assembler.place(build.single_generator_into_h(k, sign), [slot], hyperbolic.take_one())
        return remaining

    def _odd_into_hyperbolic(self, assembler: EmbeddingAssembler, degree: int) -> None:
        _, _, hyperbolic, _ = self._target_pools()
        self._place_pairs_and_singles(assembler, hyperbolic, degree // 2)

    def _odd_into_even_definite_part(self, assembler: EmbeddingAssembler, degree: int) -> None:
        _, _, hyperbolic, e8 = self._target_pools()
        e8_sign = self.target_layout.e8_sign
        remaining = self._place_pairs_and_singles(assembler, hyperbolic, degree // 2, spill_sign=e8_sign)
        spill = remaining.get(e8_sign, []) if e8_sign is not None else []
        if not spill:
            return
        frame = build.e8_frame_embedding(degree, e8_sign)
        for chunk in _chunks(spill, 8):
            piece = restrict(frame, range(len(chunk)))
            assembler.place(piece, chunk, e8.take_one())

    def _hyperbolic_into_odd(self, assembler: EmbeddingAssembler, degree: int) -> None:
        pos, neg, _, _ = self._target_pools()
        self._h_blocks_into_diagonal(assembler, pos, neg, degree)

    def _h_blocks_into_diagonal(self, assembler: EmbeddingAssembler, pos: SlotPool, neg: SlotPool,
                                degree: int) -> None:
        piece = build.two_k_h_into_diag(degree // 2)
        for block in self.source_layout.hyperbolic_blocks:
            assembler.place(piece, block, [pos.take_one(), neg.take_one()])

    def _even_into_odd(self, assembler: EmbeddingAssembler, degree: int) -> None:
        pos, neg, _, _ = self._target_pools()
        sign = self.source_layout.e8_sign
        if self.source_layout.e8_blocks:
            piece = build.l_matrix(degree)
            pool = pos
            if sign is Sign.MINUS:
                piece = negate_adapter(piece)
                pool = neg
            for block in self.source_layout.e8_blocks:
                assembler.place(piece, block, pool.take(8))
        # H blocks share the pools with the E8 images
        self._h_blocks_into_diagonal(assembler, pos, neg, degree)

    def _hyperbolic_into_even(self, assembler: EmbeddingAssembler, degree: int) -> None:
        _, _, hyperbolic, _ = self._target_pools()
        self._h_blocks_into(assembler, hyperbolic, degree)

    def _h_blocks_into(self, assembler: EmbeddingAssembler, hyperbolic: SlotPool, degree: int) -> None:
        piece = build.h_into_h(degree)
        for block in self.source_layout.hyperbolic_blocks:
            assembler.place(piece, block, hyperbolic.take_one())

    def _even_into_even(self, assembler: EmbeddingAssembler, degree: int) -> None:
        _, _, hyperbolic, e8 = self._target_pools()
        sign = self.source_layout.e8_sign
        blocks = list(self.source_layout.e8_blocks)

        if blocks and sign is self.target_layout.e8_sign:
            same = min(len(blocks), len(e8))
            piece = build.e8_into_e8(degree, sign)
            for block in blocks[:same]:
                assembler.place(piece, block, e8.take_one())
            blocks = blocks[same:]

        self._h_blocks_into(assembler, hyperbolic, degree)

        if blocks:
            piece = build.e8_into_hyperbolic(degree, sign)
            for block in blocks:
                assembler.place(piece, block, _flatten(hyperbolic.take(8)))
