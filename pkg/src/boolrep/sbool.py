"""Exact arithmetic in the three-element superboolean semiring and its matrices.

Scalars are totally ordered 1v > 1 > 0, where 1v = 1 + 1 is the ghost
element and {0, 1v} is the ghost ideal.  Matrices are dense, labeled and
immutable; every operation returns a new value.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, total_ordering
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import DuplicateLabels, MatrixParseError, NonSquareError, UnknownLabel

__all__ = [
    "SBool",
    "ZERO",
    "ONE",
    "GHOST",
    "as_sbool",
    "sb_sum",
    "sb_product",
    "SbMatrix",
    "BoolMatrix",
]

# Independence checks fall back from coefficient enumeration to witness
# search above this subset size (2^k combinations otherwise).
BRUTE_FORCE_LIMIT = 20


@total_ordering
class SBool(Enum):
    """Superboolean scalar: 0, 1, or the ghost element 1v."""

    ZERO = 0
    ONE = 1
    GHOST = 2

    def __add__(self, other):
        if not isinstance(other, SBool):
            return NotImplemented
        if self is SBool.ZERO:
            return other
        if other is SBool.ZERO:
            return self
        return SBool.GHOST  # any two nonzero summands collide: 1 + 1 = 1v

    def __mul__(self, other):
        if not isinstance(other, SBool):
            return NotImplemented
        if self is SBool.ZERO or other is SBool.ZERO:
            return SBool.ZERO
        if self is SBool.ONE and other is SBool.ONE:
            return SBool.ONE
        return SBool.GHOST

    def __lt__(self, other):
        if not isinstance(other, SBool):
            return NotImplemented
        return self.value < other.value

    @property
    def is_ghost(self) -> bool:
        """True for members of the ghost ideal {0, 1v}."""
        return self is not SBool.ONE

    @property
    def token(self) -> str:
        return _TOKEN[self]

    @classmethod
    def from_token(cls, text: str) -> "SBool":
        try:
            return _FROM_TOKEN[text.strip()]
        except KeyError:
            raise MatrixParseError(f"not a superboolean entry: {text!r}") from None

    def __repr__(self):
        return f"SBool.{self.name}"


ZERO, ONE, GHOST = SBool.ZERO, SBool.ONE, SBool.GHOST

_TOKEN = {ZERO: "0", ONE: "1", GHOST: "1v"}
_FROM_TOKEN = {"0": ZERO, "1": ONE, "1v": GHOST}
_COMPLEMENT = {ZERO: ONE, ONE: ZERO, GHOST: GHOST}


def as_sbool(value) -> SBool:
    """Coerce an SBool, a bool, 0/1/2, or a token string to a scalar."""
    if isinstance(value, SBool):
        return value
    if isinstance(value, bool):
        return ONE if value else ZERO
    if isinstance(value, int):
        try:
            return SBool(value)
        except ValueError:
            raise ValueError(f"not a superboolean value: {value!r}") from None
    if isinstance(value, str):
        return SBool.from_token(value)
    raise TypeError(f"cannot interpret {value!r} as a superboolean scalar")


def sb_sum(values: Iterable[SBool]) -> SBool:
    total = ZERO
    for v in values:
        total = total + v
    return total


def sb_product(values: Iterable[SBool]) -> SBool:
    total = ONE
    for v in values:
        total = total * v
        if total is ZERO:
            break
    return total


def _default_labels(prefix: str, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(count))


def _has_ghost_combination(nz_masks, gh_masks, idxs) -> bool:
    """Does some nonzero 0/1-coefficient combination land in the ghost ideal?

    Vectors are given as (nonzero, ghost) coordinate bitmasks.  States track,
    for every coefficient support seen so far, which coordinates are hit once,
    more than once, and by a ghost; a combination is non-ghost exactly when
    some coordinate is hit once, by a plain 1.
    """
    states = [(0, 0, 0)]
    for i in idxs:
        nz, gh = nz_masks[i], gh_masks[i]
        grown = []
        for once, multi, ghost in states:
            multi2 = multi | (once & nz)
            once2 = once | nz
            ghost2 = ghost | gh
            if once2 & ~multi2 & ~ghost2 == 0:
                return True
            grown.append((once2, multi2, ghost2))
        states.extend(grown)
    return False


def _max_independent(nz_masks, gh_masks, indices, cap: int) -> int:
    """Size of the largest independent sub-collection of the given vectors.

    Depth-first over independent subsets only; an extension that produces a
    ghost combination is pruned together with everything above it, because
    dependence survives adding vectors.
    """
    if cap <= 0:
        return 0
    pool = list(indices)
    best = 0

    def extend(start: int, states, depth: int) -> bool:
        nonlocal best
        if depth > best:
            best = depth
            if best >= cap:
                return True
        for t in range(start, len(pool)):
            i = pool[t]
            nz, gh = nz_masks[i], gh_masks[i]
            grown = []
            for once, multi, ghost in states:
                multi2 = multi | (once & nz)
                once2 = once | nz
                ghost2 = ghost | gh
                if once2 & ~multi2 & ~ghost2 == 0:
                    break
                grown.append((once2, multi2, ghost2))
            else:
                if extend(t + 1, states + grown, depth + 1):
                    return True
        return False

    extend(0, [(0, 0, 0)], 0)
    return best


def _eliminate(row_nz, row_one, rows: Sequence[int], col_mask: int):
    """Nonsingularity by peeling rows whose active part is a single 1.

    Each peel is exact: the permanent of the matrix equals the permanent of
    the minor.  A lone ghost, an empty row, or no single-entry row at all
    each force the permanent into the ghost ideal.  Returns the elimination
    order as (row indices, column indices), or None when singular.
    """
    active = list(rows)
    mask = col_mask
    row_order: list[int] = []
    col_order: list[int] = []
    while active:
        pick = -1
        pick_col = 0
        for r in active:
            nz = row_nz[r] & mask
            if nz == 0:
                return None
            if nz & (nz - 1) == 0:
                if not (row_one[r] & nz):
                    return None  # the lone entry is the ghost
                pick, pick_col = r, nz
                break
        if pick < 0:
            return None  # two zero-free permutations exist, so the sum ghosts
        active.remove(pick)
        mask &= ~pick_col
        row_order.append(pick)
        col_order.append(pick_col.bit_length() - 1)
    return row_order, col_order


@dataclass(frozen=True)
class SbMatrix:
    """Immutable labeled matrix over the superboolean semiring."""

    entries: tuple[tuple[SBool, ...], ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.row_labels) != len(self.entries):
            raise ValueError("row label count does not match the grid")
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        if widths and widths.pop() != len(self.col_labels):
            raise ValueError("column label count does not match the grid")
        for axis in (self.row_labels, self.col_labels):
            if len(set(axis)) != len(axis):
                raise DuplicateLabels(f"repeated label in {axis!r}")
        self._check_entries()

    def _check_entries(self):
        for row in self.entries:
            for v in row:
                if not isinstance(v, SBool):
                    raise TypeError(f"matrix entry {v!r} is not an SBool")

    @classmethod
    def of(
        cls,
        rows: Iterable[Iterable],
        row_labels: Sequence[str] | None = None,
        col_labels: Sequence[str] | None = None,
    ):
        grid = tuple(tuple(as_sbool(v) for v in row) for row in rows)
        n_rows = len(grid)
        if grid:
            n_cols = len(grid[0])
        else:
            n_cols = len(col_labels) if col_labels is not None else 0
        rl = tuple(row_labels) if row_labels is not None else _default_labels("r", n_rows)
        cl = tuple(col_labels) if col_labels is not None else _default_labels("c", n_cols)
        return cls(grid, rl, cl)

    # -- shape and access -------------------------------------------------

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.col_labels)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_rows, self.n_cols)

    @cached_property
    def _row_lookup(self) -> dict:
        return {label: i for i, label in enumerate(self.row_labels)}

    @cached_property
    def _col_lookup(self) -> dict:
        return {label: j for j, label in enumerate(self.col_labels)}

    def _row_idx(self, key) -> int:
        if isinstance(key, str):
            try:
                return self._row_lookup[key]
            except KeyError:
                raise UnknownLabel(f"no row labeled {key!r}") from None
        i = int(key)
        if not 0 <= i < self.n_rows:
            raise UnknownLabel(f"row index {i} out of range")
        return i

    def _col_idx(self, key) -> int:
        if isinstance(key, str):
            try:
                return self._col_lookup[key]
            except KeyError:
                raise UnknownLabel(f"no column labeled {key!r}") from None
        j = int(key)
        if not 0 <= j < self.n_cols:
            raise UnknownLabel(f"column index {j} out of range")
        return j

    def entry(self, row, col) -> SBool:
        return self.entries[self._row_idx(row)][self._col_idx(col)]

    # -- cached bitmask views ---------------------------------------------

    @cached_property
    def _row_masks(self):
        """Per row: column bitmasks of (nonzero, one, ghost) entries."""
        nz, one, gh = [], [], []
        for row in self.entries:
            a = b = c = 0
            for j, v in enumerate(row):
                if v is not ZERO:
                    a |= 1 << j
                    if v is ONE:
                        b |= 1 << j
                    else:
                        c |= 1 << j
            nz.append(a)
            one.append(b)
            gh.append(c)
        return tuple(nz), tuple(one), tuple(gh)

    @cached_property
    def _col_masks(self):
        """Per column: row bitmasks of (nonzero, ghost) entries."""
        nz = [0] * self.n_cols
        gh = [0] * self.n_cols
        for i, row in enumerate(self.entries):
            bit = 1 << i
            for j, v in enumerate(row):
                if v is not ZERO:
                    nz[j] |= bit
                    if v is not ONE:
                        gh[j] |= bit
        return tuple(nz), tuple(gh)

    # -- rearrangement ----------------------------------------------------

    def complement(self):
        """Entrywise 0 -> 1, 1 -> 0, 1v -> 1v."""
        grid = tuple(tuple(_COMPLEMENT[v] for v in row) for row in self.entries)
        return type(self)(grid, self.row_labels, self.col_labels)

    def transpose(self):
        grid = tuple(zip(*self.entries)) if self.entries else ()
        if not self.entries and self.n_cols:
            grid = tuple(() for _ in range(self.n_cols))
        return type(self)(grid, self.col_labels, self.row_labels)

    def submatrix(self, rows=None, cols=None):
        """Restriction to the given rows/columns (labels or indices), in order."""
        ri = range(self.n_rows) if rows is None else [self._row_idx(r) for r in rows]
        ci = range(self.n_cols) if cols is None else [self._col_idx(c) for c in cols]
        grid = tuple(tuple(self.entries[i][j] for j in ci) for i in ri)
        return type(self)(
            grid,
            tuple(self.row_labels[i] for i in ri),
            tuple(self.col_labels[j] for j in ci),
        )

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]):
        return self.submatrix(rows=row_order, cols=col_order)

    def relabeled(self, row_labels=None, col_labels=None):
        return type(self)(
            self.entries,
            tuple(row_labels) if row_labels is not None else self.row_labels,
            tuple(col_labels) if col_labels is not None else self.col_labels,
        )

    # -- nonsingularity and rank -------------------------------------------

    def _square(self) -> int:
        if self.n_rows != self.n_cols:
            raise NonSquareError(f"{self.n_rows}x{self.n_cols} matrix is not square")
        return self.n_rows

    def permanent(self) -> SBool:
        """Sum over all permutations of the entry products (the 0x0 sum is 1)."""
        n = self._square()
        total = ZERO
        for perm in permutations(range(n)):
            term = ONE
            for j, i in enumerate(perm):
                term = term * self.entries[i][j]
                if term is ZERO:
                    break
            total = total + term
        return total

    def is_nonsingular(self) -> bool:
        """True when the permanent is exactly 1."""
        n = self._square()
        row_nz, row_one, _ = self._row_masks
        return _eliminate(row_nz, row_one, range(n), (1 << n) - 1) is not None

    def triangular_form(self):
        """Permutations putting 1s on the diagonal and 0s strictly above.

        Returns (row order, column order) as index tuples, or None when the
        matrix is singular.
        """
        n = self._square()
        row_nz, row_one, _ = self._row_masks
        orders = _eliminate(row_nz, row_one, range(n), (1 << n) - 1)
        if orders is None:
            return None
        return tuple(orders[0]), tuple(orders[1])

    def columns_independent(self, cols: Iterable) -> bool:
        """No nonzero 0/1 combination of these columns lies in the ghost ideal."""
        idxs = list(dict.fromkeys(self._col_idx(c) for c in cols))
        if len(idxs) > BRUTE_FORCE_LIMIT:
            return self._witness_rows(tuple(idxs)) is not None
        nz, gh = self._col_masks
        return not _has_ghost_combination(nz, gh, idxs)

    def rows_independent(self, rows: Iterable) -> bool:
        idxs = list(dict.fromkeys(self._row_idx(r) for r in rows))
        if len(idxs) > BRUTE_FORCE_LIMIT:
            return self.transpose()._witness_rows(tuple(idxs)) is not None
        nz, _, gh = self._row_masks
        return not _has_ghost_combination(nz, gh, idxs)

    def rank(self) -> int:
        """Maximal number of independent rows.

        Equals the maximal number of independent columns and the size of the
        largest nonsingular square submatrix.
        """
        nz, _, gh = self._row_masks
        return _max_independent(nz, gh, range(self.n_rows), min(self.n_rows, self.n_cols))

    def witness(self, cols: Iterable):
        """Row labels carrying a nonsingular square submatrix on these columns.

        Returns None when the columns are dependent.
        """
        idxs = list(dict.fromkeys(self._col_idx(c) for c in cols))
        rows = self._witness_rows(tuple(idxs))
        if rows is None:
            return None
        return tuple(self.row_labels[i] for i in rows)

    def _witness_rows(self, col_idxs: tuple[int, ...]):
        k = len(col_idxs)
        if k > self.n_rows:
            return None
        col_mask = 0
        for j in col_idxs:
            col_mask |= 1 << j
        row_nz, row_one, _ = self._row_masks
        for rows in combinations(range(self.n_rows), k):
            if _eliminate(row_nz, row_one, rows, col_mask) is not None:
                return rows
        return None

    # -- text forms ---------------------------------------------------------

    def to_csv(self) -> str:
        """Labeled CSV: header row of column labels, first field of each row
        its label, entries rendered 0 / 1 / 1v."""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([""] + list(self.col_labels))
        for label, row in zip(self.row_labels, self.entries):
            writer.writerow([label] + [v.token for v in row])
        return out.getvalue()

    @classmethod
    def from_csv(cls, text: str):
        rows = [r for r in csv.reader(io.StringIO(text)) if r]
        if not rows:
            raise MatrixParseError("empty matrix text")
        header = rows[0]
        if not header or header[0] not in ("", None):
            raise MatrixParseError("first header field must be empty")
        col_labels = tuple(header[1:])
        row_labels = []
        grid = []
        for r in rows[1:]:
            if len(r) != len(col_labels) + 1:
                raise MatrixParseError(f"row {r[:1]} has {len(r) - 1} entries, expected {len(col_labels)}")
            row_labels.append(r[0])
            grid.append(tuple(SBool.from_token(tok) for tok in r[1:]))
        try:
            return cls(tuple(grid), tuple(row_labels), tuple(col_labels))
        except (ValueError, DuplicateLabels) as exc:
            raise MatrixParseError(str(exc)) from None

    def text(self) -> str:
        """Aligned human-readable grid."""
        tokens = [[v.token for v in row] for row in self.entries]
        label_w = max((len(s) for s in self.row_labels), default=0)
        widths = [
            max([len(c)] + [len(tokens[i][j]) for i in range(self.n_rows)])
            for j, c in enumerate(self.col_labels)
        ]
        lines = [
            " ".join([" " * label_w] + [c.rjust(w) for c, w in zip(self.col_labels, widths)]).rstrip()
        ]
        for label, row in zip(self.row_labels, tokens):
            lines.append(
                " ".join([label.ljust(label_w)] + [t.rjust(w) for t, w in zip(row, widths)]).rstrip()
            )
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"<{type(self).__name__} {self.n_rows}x{self.n_cols}>"


@dataclass(frozen=True, repr=False)
class BoolMatrix(SbMatrix):
    """Superboolean matrix whose entries are restricted to {0, 1}."""

    def _check_entries(self):
        super()._check_entries()
        for row in self.entries:
            for v in row:
                if v is GHOST:
                    raise ValueError("boolean matrix cannot hold the ghost 1v")
