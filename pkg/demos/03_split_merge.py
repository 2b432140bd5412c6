"""Splitting butterfly partitions into odd parts, and merging back.

The three consecutive largest parts become the head of an odd-part
partition; power-of-two parts fold into the largest odd part; other even
parts Euler-split.  Merging is only possible inside the "merging caps",
which bound every power of two that the inverse map would recreate.
"""

from butterflyseq import (
    Partition,
    caps_of,
    count_capped,
    merge_odd,
    named_sequence,
    split,
)

for parts, variant in [
    ([5, 4, 3], "standard"),
    ([9, 8, 7, 6, 5, 4, 3, 2], "standard"),
    ([10, 9, 8, 7, 6, 5, 4, 3], "standard"),
    ([7, 6, 5, 4, 3, 2], "switched"),
    ([10, 9, 8], "switched"),
]:
    p = Partition(parts)
    q = split(p, variant)
    back = merge_odd(q, variant)
    print("%-20s --%s--> %-22s --merge--> %s" % (p, variant[:5], q, back))

print()
q = Partition([5, 3, 3, 3])
caps = caps_of(q)
print("caps of %s (routed to %s): bound %d" % (q, caps.form, caps.bound))
for key, ok in caps.checks.items():
    print("  %s: largest power %d  %s" % (key, caps.largest_pows[key],
                                          "ok (at the cap)" if ok else "violated"))
print("merges to:", merge_odd(q))

print()
print("a violated cap: 13+5+3 would recreate a part 4 above the third part 3")
try:
    merge_odd(Partition([13, 5, 3]))
except ValueError as exc:
    print("  ->", exc)

print()
print("counting capped odd forms reproduces the even/odd butterfly split:")
se = named_sequence("s_e", 30)
so = named_sequence("s_o", 30)
for n in (12, 18, 27, 30):
    print("  n=%d: standard %s, switched %s, enumerated (%d, %d)"
          % (n, count_capped(n, "standard"), count_capped(n, "switched"),
             se[n], so[n]))
