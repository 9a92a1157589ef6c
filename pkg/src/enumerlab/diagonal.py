"""The diagonal-complement operator on enumerations of binary sequences,
and the list transforms it interacts with (insert, split, interleave).

An Enumeration is a total deterministic map from a 0-based row index to a
BitSeq.  The diagonal complement x of an enumeration E flips the j-th bit of
the j-th listed sequence: bit j of x is 1 - bit j of row j-1.  Row r and
diagonal position r+1 therefore always pair up; every Certificate records
that offset explicitly, because an off-by-one here silently breaks the
construction.

A Certificate is a machine-checkable proof that two sequences differ at a
position; check_certificate revalidates one from nothing but public bit
lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .bitseq import BitSeq, from_rule

__all__ = [
    "Enumeration",
    "Certificate",
    "constant",
    "antidiagonal",
    "certificates",
    "check_certificate",
    "insert",
    "split",
    "interleave",
]


class Enumeration:
    """A total map from row index (0-based) to BitSeq: a "list" of
    infinite binary sequences."""

    __slots__ = ("_rule", "description")

    def __init__(self, rule: Callable[[int], BitSeq], description: str = "enum"):
        self._rule = rule
        self.description = description

    def row(self, i: int) -> BitSeq:
        if i < 0:
            raise ValueError(f"row indices are 0-based naturals, got {i}")
        return self._rule(i)

    def __call__(self, i: int) -> BitSeq:
        return self.row(i)

    def __repr__(self) -> str:
        return f"Enumeration({self.description})"


@dataclass(frozen=True)
class Certificate:
    """Row r of an enumeration differs from a candidate sequence at
    `position`: the candidate holds left_bit there, the row holds right_bit.
    For antidiagonal certificates, position = row + 1."""

    row: int
    position: int
    left_bit: int
    right_bit: int

    def __post_init__(self) -> None:
        if self.left_bit == self.right_bit:
            raise ValueError("certificate bits must differ")
        if self.position < 1:
            raise ValueError(f"positions are 1-based, got {self.position}")


def constant(s: BitSeq) -> Enumeration:
    """Every row is the same sequence."""
    return Enumeration(lambda i: s, description=f"constant({s.description})")


def antidiagonal(E: Enumeration) -> BitSeq:
    """The sequence x with bit j = 1 - (bit j of row j-1): differs from
    every row of E at the paired diagonal position."""
    return from_rule(
        lambda j: 1 - E.row(j - 1).bit_at(j),
        description=f"antidiagonal({E.description})",
    )


def certificates(E: Enumeration, upto: int) -> list[Certificate]:
    """Disagreement certificates for the diagonal complement of E against
    each of the first `upto` rows."""
    x = antidiagonal(E)
    out = []
    for r in range(upto):
        pos = r + 1
        out.append(Certificate(r, pos, x.bit_at(pos), E.row(r).bit_at(pos)))
    return out


def check_certificate(E: Enumeration, x: BitSeq, cert: Certificate) -> bool:
    """Revalidate a certificate by direct bit lookups only."""
    left = x.bit_at(cert.position)
    right = E.row(cert.row).bit_at(cert.position)
    return left == cert.left_bit and right == cert.right_bit and left != right


def insert(E: Enumeration, k: int, s: BitSeq) -> Enumeration:
    """Insert s at row k, shifting rows k and beyond down by one."""
    if k < 0:
        raise ValueError(f"insertion index must be >= 0, got {k}")

    def rule(i: int) -> BitSeq:
        if i < k:
            return E.row(i)
        if i == k:
            return s
        return E.row(i - 1)

    return Enumeration(
        rule, description=f"insert({E.description}, {k}, {s.description})"
    )


def split(E: Enumeration) -> tuple[Enumeration, Enumeration]:
    """Separate even-indexed and odd-indexed rows into two reindexed
    enumerations: (i -> row 2i, i -> row 2i+1)."""
    even = Enumeration(
        lambda i: E.row(2 * i), description=f"spliteven({E.description})"
    )
    odd = Enumeration(
        lambda i: E.row(2 * i + 1), description=f"splitodd({E.description})"
    )
    return even, odd


def interleave(Ea: Enumeration, Eb: Enumeration) -> Enumeration:
    """Inverse of split: row 2i comes from Ea, row 2i+1 from Eb."""
    return Enumeration(
        lambda i: Ea.row(i // 2) if i % 2 == 0 else Eb.row(i // 2),
        description=f"interleave({Ea.description}, {Eb.description})",
    )
