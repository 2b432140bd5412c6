"""The checksum algorithms: pentagonal offsets in, triangular numbers out.

For each of q, r, s, t the alternating pentagonal-offset sum of the sequence
collapses to a constant supported on triangular numbers (shifted by the
sequence's difference polynomial).  Knowing that constant, the relation can
be solved forward, rebuilding the whole table recursively.
"""

from butterflyseq import checksum, expected_checksum, named_sequence, recursive_solve

print("checksum values of the butterfly sequence at m = 0..24:")
print(" ", [checksum("s", m) for m in range(25)])
print("note the wrinkled prefix 1, -1, -1, 2, -2, 1 and the triangular support after it")

print()
print("predicted vs computed at a few spots:")
for name, m in [("q", 6), ("q", 5), ("s", 7), ("t", 10), ("t", 11)]:
    print("  %s(%d): checksum %d, predicted %d"
          % (name, m, checksum(name, m), expected_checksum(name, m)))

print()
print("rebuilding the butterfly sequence from the checksum relation alone:")
solved = recursive_solve("s", 23)
table = named_sequence("s", 23)
print("  solved:    ", list(solved.values))
print("  enumerated:", [table[m] for m in range(24)])
print("  identical: ", list(solved.values) == [table[m] for m in range(24)])
