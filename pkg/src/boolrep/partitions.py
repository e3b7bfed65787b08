"""Maximal chains of a flat lattice and the ground-set partitions they induce.

Each maximal chain F_0 < ... < F_k from bottom to top cuts the ground set
into blocks Q_i = F_i minus F_{i-1}.  Partial transversals of these blocks
are exactly the subsets whose atoms are independent in the lattice
representation; the witness construction makes one direction explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import BoolrepError, ChainLimitExceeded, UnknownLabel
from .lattice import FlatLattice, LatticeWitness
from .matroid import GroundSet

__all__ = [
    "DEFAULT_CHAIN_LIMIT",
    "ChainPartition",
    "maximal_chains",
    "partition_of_chain",
    "is_partial_transversal",
    "transversal_bases",
    "exists_transversal_partition",
    "transversal_witness",
]

DEFAULT_CHAIN_LIMIT = 10**6


@dataclass(frozen=True)
class ChainPartition:
    """The ordered blocks cut out of the ground set by one maximal chain.

    Partitions are kept keyed to their generating chain; two chains may cut
    identical blocks and still count separately.
    """

    ground: GroundSet
    chain: tuple[str, ...]
    chain_flats: tuple[tuple[str, ...], ...]
    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if len(self.chain) != len(self.chain_flats):
            raise BoolrepError("chain names and flats disagree in length")
        if len(self.blocks) + 1 != len(self.chain):
            raise BoolrepError("a k-step chain must cut exactly k blocks")
        union = 0
        total = 0
        for block in self.blocks:
            if not block:
                raise BoolrepError("empty partition block")
            mask = self.ground.mask_of(block)
            union |= mask
            total += len(block)
        if union != self.ground.full_mask or total != self.ground.size:
            raise BoolrepError("blocks do not partition the ground set")

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_index_of(self, element: str) -> int:
        """Zero-based index of the block holding this ground element."""
        for i, block in enumerate(self.blocks):
            if element in block:
                return i
        raise UnknownLabel(f"no block holds {element!r}")

    def to_json_dict(self) -> dict:
        return {
            "chain": [list(flat) for flat in self.chain_flats],
            "blocks": [list(block) for block in self.blocks],
        }


def maximal_chains(
    lattice: FlatLattice, limit: int = DEFAULT_CHAIN_LIMIT
) -> Iterator[tuple[str, ...]]:
    """All bottom-to-top cover chains, lexicographic in element index.

    Yields up to `limit` chains; asking for one more raises, so a truncated
    enumeration is never silently mistaken for a complete one.
    """
    count = 0

    def walk(i: int, prefix: tuple[int, ...]) -> Iterator[tuple[str, ...]]:
        nonlocal count
        prefix = prefix + (i,)
        if i == lattice.top_index:
            count += 1
            if count > limit:
                raise ChainLimitExceeded(f"more than {limit} maximal chains")
            yield tuple(lattice.names[k] for k in prefix)
            return
        for j in lattice.upper_covers[i]:
            yield from walk(j, prefix)

    return walk(lattice.bottom_index, ())


def partition_of_chain(lattice: FlatLattice, chain: Sequence[str]) -> ChainPartition:
    """Blocks Q_i = F_i minus F_(i-1) for a maximal chain of flats."""
    if lattice.ground is None or lattice.flat_masks is None:
        raise BoolrepError("partitions need a lattice built from a matroid")
    idxs = [lattice.index(name) for name in chain]
    if not idxs or idxs[0] != lattice.bottom_index or idxs[-1] != lattice.top_index:
        raise BoolrepError("a maximal chain runs from the bottom to the top")
    for a, b in zip(idxs, idxs[1:]):
        if b not in lattice.upper_covers[a]:
            raise BoolrepError(
                f"{lattice.names[b]!r} does not cover {lattice.names[a]!r}"
            )
    ground = lattice.ground
    masks = [lattice.flat_masks[i] for i in idxs]
    blocks = tuple(
        ground.labels_of(hi & ~lo) for lo, hi in zip(masks, masks[1:])
    )
    flats = tuple(ground.labels_of(m) for m in masks)
    return ChainPartition(ground, tuple(chain), flats, blocks)


def is_partial_transversal(partition: ChainPartition, labels: Iterable[str]) -> bool:
    """True when the subset meets every block at most once."""
    mask = partition.ground.mask_of(labels)
    for block in partition.blocks:
        if (partition.ground.mask_of(block) & mask).bit_count() > 1:
            return False
    return True


def transversal_bases(partition: ChainPartition) -> tuple[tuple[str, ...], ...]:
    """All full-size transversals: one element picked from every block,
    in canonical subset order."""
    ground = partition.ground
    picks = {ground.mask_of(choice) for choice in product(*partition.blocks)}
    return tuple(ground.labels_of(m) for m in sorted(picks, key=ground.sort_key))


def exists_transversal_partition(
    lattice: FlatLattice,
    labels: Iterable[str],
    limit: int = DEFAULT_CHAIN_LIMIT,
):
    """Some chain partition having the subset as a partial transversal, or
    None after exhausting every chain.  A tripped chain cap propagates, so
    the caller never confuses "searched everything" with "gave up"."""
    wanted = tuple(labels)
    for chain in maximal_chains(lattice, limit):
        partition = partition_of_chain(lattice, chain)
        if is_partial_transversal(partition, wanted):
            return partition
    return None


def transversal_witness(
    lattice: FlatLattice, partition: ChainPartition, labels: Iterable[str]
) -> LatticeWitness:
    """The explicit independence certificate for a partial transversal.

    Rows are the atoms of the chosen elements ordered by block position;
    column j is the chain flat just below block j's upper flat.  Every row
    escapes its own column and is inside all later ones, so the submatrix
    is triangular with a unit diagonal.
    """
    placed = sorted(
        ((partition.block_index_of(x), x) for x in labels), key=lambda p: p[0]
    )
    for (b1, x1), (b2, x2) in zip(placed, placed[1:]):
        if b1 == b2:
            raise BoolrepError(
                f"{x1!r} and {x2!r} share a block; not a partial transversal"
            )
    rows = tuple(lattice.atom_of(x) for _, x in placed)
    cols = tuple(partition.chain[b] for b, _ in placed)
    return LatticeWitness(rows, cols)
