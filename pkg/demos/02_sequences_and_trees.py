"""Infinite bit sequences and finite tree truncations.

A BitSeq is a total rule from 1-based positions to bits; nothing is ever
materialized.  Finite paths are plain bit strings, and the tree is pure
index arithmetic.
"""

from enumerlab import (
    complement,
    dyadic_bounds,
    eq_prefix,
    nat_row,
    node_count,
    ones,
    paths_at_depth,
    periodic,
    prefix,
    prefix_chain,
)

s = periodic("011")
print(f"A periodic sequence: {prefix(s, 18)} ...")
print(f"Its complement:      {prefix(complement(s), 18)} ...")

print()
print("Each sequence pins down a real number through nested exact intervals:")
for n in (1, 2, 4, 8):
    lo, hi = dyadic_bounds(s, n)
    print(f"  after {n} bits: [{lo}, {hi}]  (width 1/2^{n})")

print()
print("nat_row(r) is the binary expansion of r, least significant bit first:")
for r in (5, 6, 11):
    print(f"  nat_row({r}) = {prefix(nat_row(r), 8)} ...")

print()
print("Sequences are compared by prefix only; equality is never offered:")
print(f"  ones vs nat_row(6) first differ at position "
      f"{eq_prefix(ones(), nat_row(6), 100)}")

print()
print("A path is the chain of its finite prefixes:")
for p in prefix_chain(nat_row(5), 5):
    print(f"  {p}")

print()
print("All 2^i root paths of length i, and the non-root node count:")
for i in (1, 2, 3):
    print(f"  length {i}: {' '.join(paths_at_depth(i))}")
total = 0
for i in range(1, 11):
    total += 2**i
    assert node_count(i) == total
print(f"  node_count(10) = {node_count(10)} = 2 + 4 + ... + 2^10")
