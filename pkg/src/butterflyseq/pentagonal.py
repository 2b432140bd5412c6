"""Pentagonal structure of butterfly partitions.

Every butterfly partition is exactly one of: a pentagonal staircase, a
generalized pentagonal staircase, either of those with a domino (an extra
part 2), or non-pentagonal.  Non-pentagonal partitions carry a removable
horizontal bar (a smallest non-2 part equal to h, with the h largest parts
consecutive) or a removable vertical bar (exactly h consecutive largest
parts, everything but an optional 2 above h); the bar bijections pair these
across the parity of the second-largest part, which is what forces the
even/odd butterfly counts to agree away from the four closed-form inputs.
"""

from dataclasses import dataclass

from .families import (
    BAR_AE,
    BAR_AO,
    BAR_BE,
    BAR_BO,
    BUTTERFLY,
    BUTTERFLY_EVEN,
    BUTTERFLY_ODD,
    EQUAL_TRIPLE,
    STAIRCASE_321,
    STAIRCASE_33,
    Family,
    count_family,
    enumerate_family,
    in_family,
)
from .partitions import Partition
from .sequences import (
    EVEN_MINUS_ONE_FORMS,
    EVEN_PLUS_ONE_FORMS,
    exception_form_of,
)

PENTAGONAL = "pentagonal"
GEN_PENTAGONAL = "gen_pentagonal"
PENTAGONAL_DOMINO = "pentagonal_domino"
GEN_PENTAGONAL_DOMINO = "gen_pentagonal_domino"
NONPENT_HBAR = "nonpent_hbar"
NONPENT_VBAR = "nonpent_vbar"

_PENT_KINDS = (PENTAGONAL, GEN_PENTAGONAL, PENTAGONAL_DOMINO, GEN_PENTAGONAL_DOMINO)


@dataclass(frozen=True)
class PentClass:
    kind: str
    h: int


def make_pentagonal(kind, h) -> Partition:
    """The canonical partition of each pentagonal kind.

    Sums: h(3h-1)/2 for the pentagonal staircase, h(3h+1)/2 for the
    generalized one, plus 2 for the domino kinds.  The domino on the
    generalized staircase exists from h = 2 (its bare staircase would only
    have two parts); all other kinds need h >= 3.
    """
    min_h = 2 if kind == GEN_PENTAGONAL_DOMINO else 3
    if h < min_h:
        raise ValueError("%s requires h >= %d" % (kind, min_h))
    if kind == PENTAGONAL:
        return Partition(range(2 * h - 1, h - 1, -1))
    if kind == GEN_PENTAGONAL:
        return Partition(range(2 * h, h, -1))
    if kind == PENTAGONAL_DOMINO:
        return Partition(tuple(range(2 * h - 1, h - 1, -1)) + (2,))
    if kind == GEN_PENTAGONAL_DOMINO:
        return Partition(tuple(range(2 * h, h, -1)) + (2,))
    raise ValueError("unknown pentagonal kind %r" % kind)


def classify(p: Partition) -> PentClass:
    """The five-way classification, total and exclusive on butterfly partitions.

    Non-pentagonal partitions get the smallest h >= 3 admitting them into a
    bar set, horizontal before vertical at equal h.
    """
    if not in_family(p, Family(BUTTERFLY)):
        raise ValueError("not a butterfly partition: %s" % p)
    h = len(p)
    if h >= 3 and p[0] in (2 * h - 1, 2 * h):
        kind = PENTAGONAL if p[0] == 2 * h - 1 else GEN_PENTAGONAL
        if p == make_pentagonal(kind, h):
            return PentClass(kind, h)
    h = len(p) - 1
    if h >= 3 and p[0] == 2 * h - 1 and p == make_pentagonal(PENTAGONAL_DOMINO, h):
        return PentClass(PENTAGONAL_DOMINO, h)
    if h >= 2 and p[0] == 2 * h and p == make_pentagonal(GEN_PENTAGONAL_DOMINO, h):
        return PentClass(GEN_PENTAGONAL_DOMINO, h)
    for h in range(3, p[0] + 1):
        if in_family(p, Family(BAR_AE, h)) or in_family(p, Family(BAR_AO, h)):
            return PentClass(NONPENT_HBAR, h)
        if in_family(p, Family(BAR_BE, h)) or in_family(p, Family(BAR_BO, h)):
            return PentClass(NONPENT_VBAR, h)
    raise AssertionError("unclassifiable butterfly partition: %s" % p)


def enumerate_bars(n, h):
    """The four bar sets at (n, h) as (A_e, A_o, B_e, B_o)."""
    if n < 6 or h < 3:
        raise ValueError("need n >= 6 and h >= 3")
    return (enumerate_family(n, Family(BAR_AE, h)),
            enumerate_family(n, Family(BAR_AO, h)),
            enumerate_family(n, Family(BAR_BE, h)),
            enumerate_family(n, Family(BAR_BO, h)))


EQUAL = "equal"
EVEN_MINUS_ONE = "even_minus_one"   # even-second-part count trails by one
EVEN_PLUS_ONE = "even_plus_one"     # even-second-part count leads by one


@dataclass(frozen=True)
class ParityWitness:
    relation: str
    form: str | None   # which closed form matched, if any
    t: int | None


def parity_relation(n) -> ParityWitness:
    """Predicted relation between the even/odd butterfly counts at n,
    from the four closed forms with t >= 2."""
    if n < 6:
        raise ValueError("defined for n >= 6")
    hit = exception_form_of(n)
    if hit is None:
        return ParityWitness(EQUAL, None, None)
    form, t = hit
    if form in EVEN_MINUS_ONE_FORMS:
        return ParityWitness(EVEN_MINUS_ONE, form, t)
    assert form in EVEN_PLUS_ONE_FORMS
    return ParityWitness(EVEN_PLUS_ONE, form, t)


def parity_relation_holds(n) -> bool:
    """Does the predicted relation agree with enumeration at n?"""
    w = parity_relation(n)
    se = count_family(n, Family(BUTTERFLY_EVEN))
    so = count_family(n, Family(BUTTERFLY_ODD))
    if w.relation == EQUAL:
        return se == so
    if w.relation == EVEN_MINUS_ONE:
        return se == so - 1
    return se == so + 1


@dataclass(frozen=True)
class ParityRefinedCounts:
    n: int
    s: int
    s_e: int
    s_o: int
    e: int
    o: int
    e_prime: int
    o_prime: int
    e_dprime: int
    o_dprime: int
    relation: str
    relations_hold: bool


def parity_refined_counts(n) -> ParityRefinedCounts:
    """All parity-refined counts at n, with the sign relations evaluated.

    The equal-triple counts split by the parity of the repeated value, the
    two staircase forms by the parity of the number of parts.  At the
    closed-form inputs one count leads its partner by one, with the lead
    on the staircase-to-3-2-1 side mirrored relative to the other two.
    """
    if n < 6:
        raise ValueError("defined for n >= 6")
    s_e = count_family(n, Family(BUTTERFLY_EVEN))
    s_o = count_family(n, Family(BUTTERFLY_ODD))
    triple = enumerate_family(n, Family(EQUAL_TRIPLE))
    e = sum(1 for p in triple if p[0] % 2 == 0)
    o = len(triple) - e
    st321 = enumerate_family(n, Family(STAIRCASE_321))
    e_p = sum(1 for p in st321 if len(p) % 2 == 0)
    o_p = len(st321) - e_p
    st33 = enumerate_family(n, Family(STAIRCASE_33))
    e_pp = sum(1 for p in st33 if len(p) % 2 == 0)
    o_pp = len(st33) - e_pp

    w = parity_relation(n)
    s = s_e + s_o
    if w.relation == EQUAL:
        ok = (s == 2 * s_e and e == o and e_p == o_p and e_pp == o_pp)
    elif w.relation == EVEN_MINUS_ONE:
        ok = (s == 2 * s_e + 1 and e == o - 1 and e_p == o_p + 1 and e_pp == o_pp - 1)
    else:
        ok = (s == 2 * s_e - 1 and e == o + 1 and e_p == o_p - 1 and e_pp == o_pp + 1)
    return ParityRefinedCounts(n, s, s_e, s_o, e, o, e_p, o_p, e_pp, o_pp,
                           w.relation, ok)
