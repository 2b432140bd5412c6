"""The three bijections, drawn on Young diagrams.

Each map moves a single unit or a single bar and explains one counting
identity: raising the largest part relates q(n-1) to the gap-two strict
partitions of n; the butterfly move relates the consecutive-pair partitions
of n-1 with a 1 to those of n with the pair isolated; the bar move trades a
horizontal part h for a vertical column on the h largest parts.
"""

from butterflyseq import (
    Partition,
    bar_forward,
    butterfly_forward,
    raise_largest,
    render_young,
    verify_bijection,
)


def show(label, p):
    print(label)
    print(render_young(p))
    print()


p = Partition([5, 3, 1])
show("a strict partition of 9:", p)
show("after adding one unit to the largest part (now a gap-two partition of 10):",
     raise_largest(p))

p = Partition([5, 4, 2, 1])
show("a consecutive-pair partition of 12 with smallest part 1:", p)
show("drop the 1, add a unit to each of the two largest parts (partition of 13):",
     butterfly_forward(p))

p = Partition([6, 5, 4, 3])
show("a butterfly partition of 18 with a horizontal bar 3:", p)
show("remove the 3, add one unit to the three largest parts (vertical bar 3):",
     bar_forward(p, 3))

for kind, lo, hi in (("raise", 4, 40), ("butterfly", 6, 40), ("bar", 21, 40)):
    print(verify_bijection(kind, lo, hi))
