"""The butterfly sequence and its relatives, computed from scratch.

Start with q(n), the number of partitions of n into distinct parts.  Its
first difference r(n) counts the strict partitions whose two largest parts
are consecutive, and the second difference s(n) -- the butterfly sequence --
counts, from n = 6 on, the strict partitions with at least three parts, the
three largest consecutive, and no part 1.
"""

from butterflyseq import mod3_slices, named_sequence, parity_exception_inputs, to_bfile

q = named_sequence("q", 23)
print("strict-partition counts q(0..23):")
print(" ", list(q.values))

r = named_sequence("r", 23)
s = named_sequence("s", 23)
print("first differences r:  ", list(r.values))
print("second differences s: ", list(s.values))

print()
print("s(9) = %d  <- the single butterfly partition 4+3+2" % s[9])
print("s(18) = %d <- 7+6+5 and 6+5+4+3" % s[18])

t = named_sequence("t", 20)
print()
print("t(n) = s(n) + s(n-1) + s(n-2) counts partitions into odd parts >= 5:")
print(" ", list(t.values))
print("t(14) = %d  <- 9+5 and 7+7" % t[14])

s51 = named_sequence("s", 51)
print()
print("the three mod-3 slices of s, from m = 3:")
for residue in (0, 1, 2):
    print("  s(3m+%d):" % residue, list(mod3_slices(s51, residue, 3).values))

print()
print("inputs where the even/odd-second-part butterfly counts differ (n <= 51):")
print(" ", parity_exception_inputs(51))

print()
print("b-file export of r1 (consecutive top pair, no part 1):")
print(to_bfile(named_sequence("r1", 10)))
