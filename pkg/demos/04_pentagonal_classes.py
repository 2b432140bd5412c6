"""Every butterfly partition is pentagonal-shaped or carries a removable bar.

The four pentagonal shapes (staircase, generalized staircase, and both with
a domino) occur once each at their own n; everything else has either a
horizontal bar (a smallest non-2 part h under h consecutive largest parts)
or a vertical bar (exactly h consecutive largest parts with everything above
h).  The bar bijections swap the parity of the second part, which is why the
even and odd butterfly counts agree except at four families of inputs.
"""

from butterflyseq import (
    classify,
    parity_refined_counts,
    enumerate_bars,
    enumerate_family,
    make_pentagonal,
    parity_relation,
)
from butterflyseq.families import BUTTERFLY, Family

print("the four pentagonal shapes at h = 3:")
for kind in ("pentagonal", "gen_pentagonal", "pentagonal_domino", "gen_pentagonal_domino"):
    p = make_pentagonal(kind, 3)
    print("  %-22s %-12s n = %d" % (kind, p, p.n))

print()
print("classification of every butterfly partition of 24:")
for p in enumerate_family(24, Family(BUTTERFLY)):
    c = classify(p)
    print("  %-14s -> %s h=%d" % (p, c.kind, c.h))

print()
ae, ao, be, bo = enumerate_bars(21, 3)
print("bar sets at n=21, h=3:  A_e=%s  A_o=%s  B_e=%s  B_o=%s"
      % ([str(x) for x in ae], [str(x) for x in ao],
         [str(x) for x in be], [str(x) for x in bo]))

print()
print("parity relation at a few inputs:")
for n in (18, 12, 9, 26, 40):
    w = parity_relation(n)
    cc = parity_refined_counts(n)
    print("  n=%2d: %s%s  (s_e=%d, s_o=%d)"
          % (n, w.relation,
             "" if w.form is None else " via %s t=%d" % (w.form, w.t),
             cc.s_e, cc.s_o))
