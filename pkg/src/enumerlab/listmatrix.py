"""The truth-table matrix: row r is the binary expansion of r, least
significant bit first.

entry(r, c) = bit c of r, so down any column c the entries follow the
period-2^(c+1) pattern of 2^c zeros then 2^c ones.  The 2^i-by-i top-left
submatrix lists every length-i bit string exactly once; that makes the
matrix a candidate "complete list" of infinite paths, and also the canonical
counterexample: every row has finite support, so no row is an
infinite-support sequence and the diagonal complement of the matrix is the
all-ones sequence.

The matrix is a pure rule; no view is ever materialized beyond what a
caller enumerates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitseq import BitSeq, nat_row, prefix
from .budget import check_budget
from .diagonal import Enumeration
from .pairing import row_label

__all__ = [
    "entry",
    "row_seq",
    "matrix_enumeration",
    "submatrix_rows",
    "LabeledEnumeration",
    "figure6_enumeration",
]


def entry(r: int, c: int) -> int:
    """Bit c of row r: floor(r / 2^c) mod 2."""
    if r < 0 or c < 0:
        raise ValueError(f"matrix indices must be >= 0, got ({r}, {c})")
    return (r >> c) & 1


def row_seq(r: int) -> BitSeq:
    """Row r as an infinite sequence: bit i (1-based) = entry(r, i-1).
    Finite support, with no 1 past position bitlen(r)."""
    return nat_row(r)


def matrix_enumeration() -> Enumeration:
    """The matrix as an enumeration: row index r maps to row_seq(r)."""
    return Enumeration(row_seq, description="truth-table matrix")


def submatrix_rows(i: int, budget: int | None = None) -> set[str]:
    """The set of length-i prefixes of the first 2^i rows.

    Contract: equals the full set of length-i bit strings, each occurring
    exactly once (verified by the audit, claim C8).
    """
    if i < 1:
        raise ValueError(f"submatrix width must be >= 1, got {i}")
    check_budget(1 << i, budget)
    return {prefix(row_seq(r), i) for r in range(1 << i)}


@dataclass(frozen=True)
class LabeledEnumeration:
    """The matrix enumeration together with its zigzag row labels: row i
    is labeled with the walk position of the first element of grid row i.
    The label sequence begins 0, 2, 3, 9, 10, 20, 21."""

    rows: Enumeration = field(default_factory=matrix_enumeration)

    def label(self, i: int) -> int:
        return row_label(i)

    def row(self, i: int) -> BitSeq:
        return self.rows.row(i)


def figure6_enumeration() -> LabeledEnumeration:
    """The matrix rows paired with their boustrophedon labels."""
    return LabeledEnumeration()
