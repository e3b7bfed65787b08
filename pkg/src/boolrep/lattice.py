"""The lattice of flats of a simple matroid and its boolean representation.

Elements are kept in canonical flat order.  The structure matrix records
containment; its entrywise complement is the representation whose row rank
realizes lattice heights.  Chains, witnesses, and the maps between them
live here; partition machinery builds on top in a sibling module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .bitops import bits, mask_of
from .errors import (
    BoolrepError,
    DuplicateLabels,
    InvalidWitness,
    NotSimple,
    UnknownLabel,
)
from .matroid import GroundSet, Matroid
from .sbool import BoolMatrix, ONE, ZERO

__all__ = ["FlatLattice", "LatticeWitness", "pentagon"]


@dataclass(frozen=True)
class LatticeWitness:
    """Equal-sized row and column subsets of the representation matrix.

    A witness is valid when the designated square submatrix is nonsingular;
    validity is checked by the lattice, which owns the matrix.
    """

    rows: tuple[str, ...]
    cols: tuple[str, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols):
            raise InvalidWitness(
                f"{len(self.rows)} rows against {len(self.cols)} columns"
            )


@dataclass(frozen=True)
class FlatLattice:
    """A finite lattice, element i below element j iff bit j of up[i] is set.

    Construction validates the full partial-order and lattice axioms.  When
    built from a matroid, flat_masks and ground record what the elements
    are; order-only instances leave both None.
    """

    names: tuple[str, ...]
    up: tuple[int, ...]
    flat_masks: tuple[int, ...] | None = None
    ground: GroundSet | None = None

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise DuplicateLabels("repeated lattice element name")
        if len(self.up) != n:
            raise BoolrepError("order relation size does not match element count")
        full = (1 << n) - 1
        down = [0] * n
        for i, mask in enumerate(self.up):
            if mask & ~full:
                raise BoolrepError("order relation points outside the element list")
            if not mask >> i & 1:
                raise BoolrepError(f"order not reflexive at {self.names[i]!r}")
            for j in bits(mask):
                down[j] |= 1 << i
                if i != j and self.up[j] >> i & 1:
                    raise BoolrepError(
                        f"order not antisymmetric on {self.names[i]!r}, {self.names[j]!r}"
                    )
                if self.up[j] & ~mask:
                    raise BoolrepError(
                        f"order not transitive through {self.names[i]!r} <= {self.names[j]!r}"
                    )
        for i in range(n):
            for j in range(i + 1, n):
                if _unique_extreme(down[i] & down[j], down) < 0:
                    raise BoolrepError(
                        f"no meet for {self.names[i]!r}, {self.names[j]!r}"
                    )
                if _unique_extreme(self.up[i] & self.up[j], self.up) < 0:
                    raise BoolrepError(
                        f"no join for {self.names[i]!r}, {self.names[j]!r}"
                    )
        if n and not any(self.up[i] == full for i in range(n)):
            raise BoolrepError("lattice has no bottom element")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_matroid(cls, matroid: Matroid) -> "FlatLattice":
        if not matroid.is_simple:
            raise NotSimple("the lattice of flats is built for simple matroids only")
        flats = matroid.flat_masks
        n = len(flats)
        up = [0] * n
        for i, small in enumerate(flats):
            for j, big in enumerate(flats):
                if small & ~big == 0:
                    up[i] |= 1 << j
        names = tuple(matroid.ground.subset_name(f) for f in flats)
        lattice = cls(names, tuple(up), flats, matroid.ground)
        if len(lattice.atom_indices) != matroid.ground.size:
            raise BoolrepError("atoms do not biject with the ground elements")
        lo, hi = lattice._bottom_path_extremes()
        if lo != hi:
            raise BoolrepError("chain lengths from the bottom are not uniform")
        return lattice

    @classmethod
    def from_order(
        cls, names: Sequence[str], below: Iterable[tuple[str, str]]
    ) -> "FlatLattice":
        """Build from generating (lower, upper) pairs; the reflexive
        transitive closure is taken before validation."""
        names = tuple(names)
        index = {x: i for i, x in enumerate(names)}
        n = len(names)
        up = [1 << i for i in range(n)]
        for low, high in below:
            if low not in index or high not in index:
                raise UnknownLabel(f"unknown element in pair ({low!r}, {high!r})")
            up[index[low]] |= 1 << index[high]
        changed = True
        while changed:
            changed = False
            for i in range(n):
                grown = up[i]
                for j in bits(up[i]):
                    grown |= up[j]
                if grown != up[i]:
                    up[i] = grown
                    changed = True
        return cls(names, tuple(up))

    # -- basic structure ------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> dict:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownLabel(f"no lattice element named {name!r}") from None

    @cached_property
    def down(self) -> tuple[int, ...]:
        out = [0] * self.size
        for i, mask in enumerate(self.up):
            for j in bits(mask):
                out[j] |= 1 << i
        return tuple(out)

    @cached_property
    def bottom_index(self) -> int:
        full = (1 << self.size) - 1
        return next(i for i in range(self.size) if self.up[i] == full)

    @cached_property
    def top_index(self) -> int:
        full = (1 << self.size) - 1
        return next(i for i in range(self.size) if self.down[i] == full)

    @property
    def bottom(self) -> str:
        return self.names[self.bottom_index]

    @property
    def top(self) -> str:
        return self.names[self.top_index]

    def leq(self, low: str, high: str) -> bool:
        return bool(self.up[self.index(low)] >> self.index(high) & 1)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        """Per element, the elements immediately above it."""
        out = []
        for i in range(self.size):
            strict = self.up[i] & ~(1 << i)
            covers = [
                j for j in bits(strict) if strict & (self.down[j] & ~(1 << j)) == 0
            ]
            out.append(tuple(covers))
        return tuple(out)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.size)]
        for i, ups in enumerate(self.upper_covers):
            for j in ups:
                out[j].append(i)
        return tuple(tuple(row) for row in out)

    @cached_property
    def atom_indices(self) -> tuple[int, ...]:
        return self.upper_covers[self.bottom_index]

    @property
    def atoms(self) -> tuple[str, ...]:
        return tuple(self.names[i] for i in self.atom_indices)

    def atom_of(self, element: str) -> str:
        """Name of the atom that is this ground element's singleton flat."""
        if self.ground is None or self.flat_masks is None:
            raise BoolrepError("this lattice does not come from a matroid")
        mask = 1 << self.ground.index(element)
        for i in self.atom_indices:
            if self.flat_masks[i] == mask:
                return self.names[i]
        raise UnknownLabel(f"no atom for ground element {element!r}")

    def _topological(self) -> list[int]:
        order = sorted(range(self.size), key=lambda i: self.down[i].bit_count())
        return order

    def _bottom_path_extremes(self):
        """Longest and shortest cover-path length from the bottom, per element."""
        longest = [0] * self.size
        shortest = [0] * self.size
        for j in self._topological():
            lows = self.lower_covers[j]
            if lows:
                longest[j] = 1 + max(longest[i] for i in lows)
                shortest[j] = 1 + min(shortest[i] for i in lows)
        return tuple(longest), tuple(shortest)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain from the bottom, per element."""
        return self._bottom_path_extremes()[0]

    @property
    def height(self) -> int:
        return self.heights[self.top_index]

    def element_height(self, name: str) -> int:
        return self.heights[self.index(name)]

    # -- meets and joins --------------------------------------------------------

    def _meet_index(self, i: int, j: int) -> int:
        return _unique_extreme(self.down[i] & self.down[j], self.down)

    def _join_index(self, i: int, j: int) -> int:
        return _unique_extreme(self.up[i] & self.up[j], self.up)

    def meet(self, first: str, second: str) -> str:
        return self.names[self._meet_index(self.index(first), self.index(second))]

    def join(self, first: str, second: str) -> str:
        return self.names[self._join_index(self.index(first), self.index(second))]

    def _join_of_set(self, idxs: Iterable[int]) -> int:
        common = (1 << self.size) - 1
        for i in idxs:
            common &= self.up[i]
        return _unique_extreme(common, self.up)

    # -- matrices and rank --------------------------------------------------------

    @cached_property
    def structure_matrix(self) -> BoolMatrix:
        """Square containment table: entry (i, j) is 1 iff element i <= j."""
        grid = tuple(
            tuple(ONE if self.up[i] >> j & 1 else ZERO for j in range(self.size))
            for i in range(self.size)
        )
        return BoolMatrix(grid, self.names, self.names)

    @cached_property
    def representation(self) -> BoolMatrix:
        """Complement of the structure matrix; entry (i, j) is 1 iff i is
        not below j.  Row independence in this matrix drives everything."""
        return self.structure_matrix.complement()

    def representation_rank(self, elements: Iterable[str] | None = None) -> int:
        """Rank of the representation rows for these elements (all by default)."""
        if elements is None:
            return self.representation.rank()
        return self.representation.submatrix(rows=tuple(elements)).rank()

    def elements_independent(self, elements: Iterable[str]) -> bool:
        return self.representation.rows_independent(tuple(elements))

    # -- witnesses and chains ---------------------------------------------------

    def witness_for(self, elements: Iterable[str]):
        """A valid witness for these elements, or None when they are dependent."""
        rows = tuple(elements)
        cols = self.representation.transpose().witness(rows)
        if cols is None:
            return None
        return LatticeWitness(rows, cols)

    def is_valid_witness(self, witness: LatticeWitness) -> bool:
        sub = self.representation.submatrix(rows=witness.rows, cols=witness.cols)
        return sub.is_nonsingular()

    def chain_witness(self, chain: Sequence[str]) -> LatticeWitness:
        """Witness certifying a strict chain above the bottom: columns are
        the bottom followed by all chain elements but the last."""
        idxs = [self.index(name) for name in chain]
        if not idxs:
            raise BoolrepError("empty chain")
        if idxs[0] == self.bottom_index:
            raise BoolrepError("the chain must start strictly above the bottom")
        for a, b in zip(idxs, idxs[1:]):
            if a == b or not self.up[a] >> b & 1:
                raise BoolrepError(
                    f"{self.names[a]!r} is not strictly below {self.names[b]!r}"
                )
        cols = (self.bottom,) + tuple(chain[:-1])
        return LatticeWitness(tuple(chain), cols)

    def witness_to_chain(self, witness: LatticeWitness) -> tuple[str, ...]:
        """Strict chain recovered from a valid witness.

        After triangularizing the witness submatrix, the j-th chain element
        is the meet of the j-th through last reordered columns; strictness
        comes from each diagonal row escaping its own column.
        """
        sub = self.representation.submatrix(rows=witness.rows, cols=witness.cols)
        form = sub.triangular_form()
        if form is None:
            raise InvalidWitness("the witness submatrix is singular")
        _, col_order = form
        ordered = [self.index(witness.cols[c]) for c in col_order]
        chain = []
        running = None
        for i in reversed(ordered):
            running = i if running is None else self._meet_index(i, running)
            chain.append(running)
        chain.reverse()
        for a, b in zip(chain, chain[1:]):
            if a == b or not self.up[a] >> b & 1:
                raise BoolrepError("recovered chain is not strictly increasing")
        return tuple(self.names[i] for i in chain)

    # -- geometric test -----------------------------------------------------------

    @cached_property
    def is_geometric(self) -> bool:
        """Uniform chain lengths between comparable pairs, the semimodular
        height inequality, and every element a join of atoms."""
        n = self.size
        topo = self._topological()
        for s in range(n):
            longest = {s: 0}
            shortest = {s: 0}
            for j in topo:
                if j == s or not self.up[s] >> j & 1:
                    continue
                lows = [i for i in self.lower_covers[j] if self.up[s] >> i & 1]
                longest[j] = 1 + max(longest[i] for i in lows)
                shortest[j] = 1 + min(shortest[i] for i in lows)
                if longest[j] != shortest[j]:
                    return False
        h = self.heights
        for i in range(n):
            for j in range(i + 1, n):
                if h[i] + h[j] < h[self._join_index(i, j)] + h[self._meet_index(i, j)]:
                    return False
        atom_mask = mask_of(self.atom_indices)
        for i in range(n):
            if self._join_of_set(bits(self.down[i] & atom_mask)) != i:
                return False
        return True

    # -- export ---------------------------------------------------------------------

    def to_dot(self) -> str:
        """Hasse diagram in DOT form, bottom-up, deterministic order."""
        lines = ["digraph flats {", "  rankdir=BT;"]
        for name in self.names:
            lines.append(f'  "{name}";')
        for i in range(self.size):
            for j in self.upper_covers[i]:
                lines.append(f'  "{self.names[i]}" -> "{self.names[j]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"<FlatLattice of {self.size} elements, height {self.height}>"


def _unique_extreme(candidates: int, cones: Sequence[int]) -> int:
    """Index of the member of candidates whose cone covers all candidates,
    or -1.  With down-sets this is a maximum, with up-sets a minimum."""
    for i in bits(candidates):
        if candidates & ~cones[i] == 0:
            return i
    return -1


def pentagon() -> FlatLattice:
    """The five-element lattice with a three-step side and a two-step side;
    the smallest lattice violating uniform chain lengths."""
    return FlatLattice.from_order(
        ("B", "a", "b", "c", "T"),
        [("B", "a"), ("a", "b"), ("b", "T"), ("B", "c"), ("c", "T")],
    )
