"""Walk the grid.

The boustrophedon walk visits every pair (m, n) of the natural-number grid
exactly once, sweeping anti-diagonals in alternating direction.  The closed
forms in `pairing` invert it exactly, for arbitrarily large indices.
"""

from itertools import islice

from enumerlab import (
    GridPair,
    NodeAddr,
    level_pairs,
    node_to_pair,
    pair_to_node,
    row_label,
    zigzag_decode,
    zigzag_encode,
)
from enumerlab.pairing import zigzag_walk

print("The first ten steps of the walk, with their closed-form positions:")
for i, pair in enumerate(islice(zigzag_walk(), 10)):
    assert zigzag_decode(i) == pair
    print(f"  position {i} -> ({pair.m}, {pair.n})")

print()
print("The walk has no trouble with huge coordinates:")
p = GridPair(10**30, 7)
i = zigzag_encode(p)
print(f"  ({p.m}, {p.n}) sits at walk position {i}")
assert zigzag_decode(i) == p

print()
print("Tree levels project onto anti-diagonals of sum 2^k - 1:")
for k in range(4):
    pairs = ", ".join(f"({q.m},{q.n})" for q in level_pairs(k))
    print(f"  level {k}: {pairs}")

print()
print("Most grid points are NOT hit by the projection, e.g. (1, 1):")
print(f"  pair_to_node((1, 1)) = {pair_to_node(GridPair(1, 1))}")
print(f"  pair_to_node((1, 2)) = {pair_to_node(GridPair(1, 2))}")
assert node_to_pair(NodeAddr(2, 1)) == GridPair(1, 2)

print()
print("Walk positions of the first element of each grid row (row labels):")
print(" ", [row_label(i) for i in range(7)])
