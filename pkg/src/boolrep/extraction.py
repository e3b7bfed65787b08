"""Extract, reduce, verify, bound, and tropicalize boolean representations.

The pipeline: build the flat lattice of a simple matroid, take the
complement of its containment table, keep the atom rows, transpose.  The
resulting boolean matrix, with one column per ground element, has exactly
the matroid's independent sets as its independent column sets.  Reductions
shrink the row set; every reduction is re-verified against the matroid
rather than trusted.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import GroundTooLarge, LabelMismatch, ReductionError
from .lattice import FlatLattice
from .matroid import GroundSet, Matroid, hereditary_from_matrix
from .sbool import ONE, ZERO, BoolMatrix, SbMatrix

__all__ = [
    "VERIFY_CAP",
    "Representation",
    "VerificationReport",
    "TropicalMatrix",
    "extract_representation",
    "paper_reduce",
    "dedupe_reduce",
    "verified_reduce",
    "verify_representation",
    "size_bound",
    "tropicalize",
    "representation_to_json",
]

# Exhaustive verification walks all 2^n column subsets.
VERIFY_CAP = 12

REDUCTION_MODES = ("full", "paper", "dedupe", "verified")


@dataclass(frozen=True)
class Representation:
    """A boolean matrix representing a matroid, plus where its rows came from.

    Columns are the ground elements in canonical order; rows are the
    retained lattice elements, recorded in provenance.
    """

    matrix: BoolMatrix
    provenance: tuple[str, ...]
    reduction_mode: str
    matroid: Matroid
    lattice: FlatLattice

    def __post_init__(self):
        if self.reduction_mode not in REDUCTION_MODES:
            raise ValueError(f"unknown reduction mode {self.reduction_mode!r}")
        if self.matrix.col_labels != self.matroid.ground.labels:
            raise LabelMismatch("columns must be the ground elements in order")
        if self.matrix.row_labels != self.provenance:
            raise ValueError("row labels must match the provenance list")

    @property
    def row_count(self) -> int:
        return self.matrix.n_rows


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive independence comparison."""

    ok: bool
    mismatches: tuple[tuple[str, ...], ...]
    checked_count: int

    def __post_init__(self):
        if self.ok != (not self.mismatches):
            raise ValueError("ok must mean exactly: no mismatches")


def extract_representation(matroid: Matroid) -> Representation:
    """The full representation: one row per flat, one column per element."""
    lattice = FlatLattice.from_matroid(matroid)
    ground = matroid.ground
    atom_rows = tuple(lattice.atom_of(x) for x in ground.labels)
    matrix = (
        lattice.representation.submatrix(rows=atom_rows)
        .transpose()
        .relabeled(col_labels=ground.labels)
    )
    return Representation(matrix, lattice.names, "full", matroid, lattice)


def paper_reduce(rep: Representation) -> Representation:
    """Keep the bottom row and the rows of proper flats above the atoms.

    Atom rows and the top row carry no extra information in the worked
    examples; dropping them is not assumed safe in general, so the result
    is re-verified and a failure is a hard error.
    """
    if rep.reduction_mode != "full":
        raise ReductionError("can only reduce a full representation")
    lattice = rep.lattice
    keep = tuple(
        name
        for name in rep.provenance
        if name == lattice.bottom
        or (name != lattice.top and lattice.element_height(name) >= 2)
    )
    reduced = Representation(
        rep.matrix.submatrix(rows=keep), keep, "paper", rep.matroid, rep.lattice
    )
    report = verify_representation(reduced, rep.matroid)
    if not report.ok:
        raise ReductionError(
            f"dropping atom and top rows broke {len(report.mismatches)} subsets"
        )
    return reduced


def _strip_rows(rep: Representation, mode: str) -> Representation:
    seen = set()
    keep = []
    for label, row in zip(rep.matrix.row_labels, rep.matrix.entries):
        if all(v is ZERO for v in row) or row in seen:
            continue
        seen.add(row)
        keep.append(label)
    return Representation(
        rep.matrix.submatrix(rows=tuple(keep)),
        tuple(keep),
        mode,
        rep.matroid,
        rep.lattice,
    )


def dedupe_reduce(rep: Representation) -> Representation:
    """Drop duplicate rows and all-zero rows; both are provably inert.

    A zero row puts every combination in the ghost ideal at that
    coordinate no matter what, and a duplicate row tracks its twin, so
    column independence is untouched.  No re-verification needed.
    """
    return _strip_rows(rep, "dedupe")


def verified_reduce(rep: Representation, matroid: Matroid | None = None) -> Representation:
    """Greedy row minimization with the brute-force oracle in the loop.

    After stripping duplicates and zero rows, each remaining row is dropped
    whenever the matrix without it still induces exactly the matroid's
    independent family.  The final result is re-verified.
    """
    matroid = matroid if matroid is not None else rep.matroid
    target = matroid.independent_family.family
    current = _strip_rows(rep, "verified")
    labels = list(current.provenance)
    matrix = current.matrix
    for label in list(labels):
        if len(labels) == 1:
            break
        trial = tuple(x for x in labels if x != label)
        candidate = matrix.submatrix(rows=trial)
        if hereditary_from_matrix(candidate).family == target:
            labels = list(trial)
            matrix = candidate
    reduced = Representation(matrix, tuple(labels), "verified", matroid, rep.lattice)
    report = verify_representation(reduced, matroid)
    if not report.ok:
        raise ReductionError("greedy reduction produced a non-representation")
    return reduced


def verify_representation(rep, matroid: Matroid) -> VerificationReport:
    """Compare column independence against the matroid on every subset.

    Accepts a Representation or a bare matrix.  Column labels must be
    exactly the ground elements (any order); subsets are checked in
    canonical order and every disagreement is reported.
    """
    matrix = rep.matrix if isinstance(rep, Representation) else rep
    ground = matroid.ground
    if sorted(matrix.col_labels) != sorted(ground.labels):
        raise LabelMismatch(
            f"matrix columns {matrix.col_labels} against ground {ground.labels}"
        )
    n = ground.size
    if n > VERIFY_CAP:
        raise GroundTooLarge(
            f"exhaustive verification is capped at {VERIFY_CAP} elements"
        )
    mismatches = []
    for mask in sorted(range(1 << n), key=ground.sort_key):
        labels = ground.labels_of(mask)
        if matrix.columns_independent(labels) != matroid.is_independent_mask(mask):
            mismatches.append(labels)
    return VerificationReport(not mismatches, tuple(mismatches), 1 << n)


def size_bound(matroid: Matroid) -> int:
    """Binomial-sum ceiling on the rows any lattice-derived representation
    needs: subsets of the ground set of size at most the rank."""
    n = matroid.ground.size
    return sum(math.comb(n, i) for i in range(matroid.rank + 1))


@dataclass(frozen=True)
class TropicalMatrix:
    """Max-plus image of a boolean matrix: entries 0.0 or -inf."""

    entries: tuple[tuple[float, ...], ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    def __post_init__(self):
        for row in self.entries:
            for v in row:
                if v != 0.0 and v != float("-inf"):
                    raise ValueError(f"tropical entry must be 0 or -inf, got {v!r}")

    def to_boolean(self) -> BoolMatrix:
        """Inverse of the embedding: 0.0 back to 1, -inf back to 0."""
        grid = tuple(
            tuple(ONE if v == 0.0 else ZERO for v in row) for row in self.entries
        )
        return BoolMatrix(grid, self.row_labels, self.col_labels)

    def to_csv(self) -> str:
        import csv as _csv
        import io as _io

        out = _io.StringIO()
        writer = _csv.writer(out, lineterminator="\n")
        writer.writerow([""] + list(self.col_labels))
        for label, row in zip(self.row_labels, self.entries):
            writer.writerow([label] + ["0" if v == 0.0 else "-inf" for v in row])
        return out.getvalue()


def tropicalize(rep) -> TropicalMatrix:
    """Entrywise embedding into the max-plus semiring: 1 to 0, 0 to -inf."""
    matrix = rep.matrix if isinstance(rep, Representation) else rep
    neg_inf = float("-inf")
    grid = []
    for row in matrix.entries:
        out = []
        for v in row:
            if v is ONE:
                out.append(0.0)
            elif v is ZERO:
                out.append(neg_inf)
            else:
                raise ValueError("the max-plus embedding is defined on {0, 1} only")
        grid.append(tuple(out))
    return TropicalMatrix(tuple(grid), matrix.row_labels, matrix.col_labels)


def representation_to_json(rep: Representation) -> str:
    matrix = rep.matrix
    return json.dumps(
        {
            "rows": list(matrix.row_labels),
            "cols": list(matrix.col_labels),
            "entries": [
                [1 if v is ONE else 0 for v in row] for row in matrix.entries
            ],
        }
    )
