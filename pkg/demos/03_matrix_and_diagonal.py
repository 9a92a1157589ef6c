"""The truth-table matrix, and why it cannot list every infinite path.

Row r of the matrix is the binary expansion of r, least significant bit
first.  Its top-left 2^i-by-i corner lists every length-i bit string
exactly once, which makes it look like a complete list of paths.  The
diagonal complement shows it is not: every row has finite support, so the
all-ones path is missing, and the diagonal complement IS that path.
"""

from enumerlab import (
    antidiagonal,
    certificates,
    check_certificate,
    insert,
    prefix,
)
from enumerlab.listmatrix import entry, matrix_enumeration, submatrix_rows

print("Top-left corner of the matrix (8 rows, 6 columns):")
for r in range(8):
    print(f"  row {r}: {''.join(str(entry(r, c)) for c in range(6))}")

print()
for i in (1, 2, 3, 4):
    rows = submatrix_rows(i)
    print(f"  width {i}: {len(rows)} distinct row prefixes = 2^{i}, "
          f"covering all length-{i} strings")

E = matrix_enumeration()
x = antidiagonal(E)
print()
print(f"Diagonal complement of the matrix: {prefix(x, 24)} ...")
print("It is the all-ones sequence: every diagonal entry (r, r) is 0, "
      "because 2^r > r.")

print()
print("Machine-checkable disagreement certificates, one per row:")
for cert in certificates(E, 5):
    ok = check_certificate(E, x, cert)
    print(f"  row {cert.row}: differs at position {cert.position} "
          f"({cert.left_bit} vs {cert.right_bit}), recheck = {ok}")

print()
print("Inserting the complement back in just shifts the problem:")
E2 = insert(E, 1, x)
x2 = antidiagonal(E2)
print(f"  new row 1:            {prefix(E2.row(1), 16)} ...")
print(f"  new diagonal complement: {prefix(x2, 16)} ...")
for cert in certificates(E2, 1000):
    assert check_certificate(E2, x2, cert)
print("  ... and all 1000 fresh certificates validate again.")
