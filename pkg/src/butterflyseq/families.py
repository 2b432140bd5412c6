"""The closed catalogue of partition families.

Each family has a decidable membership predicate and a deterministic
enumerator returning partitions in lexicographically decreasing order.
Counting goes through a fast exact path where one exists (the predicates and
listers remain the oracle it is checked against).
"""

from dataclasses import dataclass

from . import partitions as pt
from .partitions import (
    DEFAULT_ENUM_LIMIT,
    Partition,
    check_limit,
    iter_butterfly_tuples,
    iter_strict_tuples,
)

STRICT = "strict"                     # distinct parts
CONSEC = "consec"                     # distinct, >= 2 parts, two largest consecutive
CONSEC_NO_ONE = "consec_no_one"       # ... and smallest part >= 2
CONSEC_WITH_ONE = "consec_with_one"   # ... and smallest part exactly 1
CONSEC_ISOLATED = "consec_isolated"   # no-one variant whose top pair sits >= 2 above the rest
BUTTERFLY = "butterfly"               # >= 3 parts, three largest consecutive, smallest >= 2
BUTTERFLY_EVEN = "butterfly_even"     # butterfly, second part even
BUTTERFLY_ODD = "butterfly_odd"       # butterfly, second part odd
EQUAL_TRIPLE = "equal_triple"         # three equal largest parts, distinct rest two below
STAIRCASE_321 = "staircase_321"       # steps <= 1 down to 3 > 2 > 1, top pair equal
STAIRCASE_33 = "staircase_33"         # steps <= 1 down to 3, 3, top pair equal
ODD_GE = "odd_ge"                     # odd parts >= b (param b in {1, 3, 5})
ODD_STEP1 = "odd_step1"               # capped odd forms of the split routes
ODD_STEP2 = "odd_step2"
ODD_STEP1_SWITCHED = "odd_step1_switched"
ODD_STEP2_SWITCHED = "odd_step2_switched"
BAR_AE = "bar_ae"                     # horizontal-bar sets (param h)
BAR_AO = "bar_ao"
BAR_BE = "bar_be"                     # vertical-bar sets (param h)
BAR_BO = "bar_bo"
BUTTERFLY_PLUS_ONES = "butterfly_plus_ones"  # butterfly core plus zero, one or two 1-parts
DISTINCT_NOT_POW2 = "distinct_not_pow2"      # distinct parts, none a power of two


@dataclass(frozen=True)
class Family:
    kind: str
    param: int | None = None

    def __str__(self):
        return self.kind if self.param is None else "%s(%d)" % (self.kind, self.param)


def _is_strict(parts):
    return all(a > b for a, b in zip(parts, parts[1:]))


def _is_butterfly(parts):
    return (len(parts) >= 3 and _is_strict(parts) and parts[-1] >= 2
            and parts[0] == parts[1] + 1 == parts[2] + 2)


def _run_length(parts):
    run = 1
    while run < len(parts) and parts[run] == parts[run - 1] - 1:
        run += 1
    return run


def _in_bar_a(parts, h):
    # smallest part other than 2 equals h; h largest consecutive; at least
    # h parts greater than h
    if h < 3 or not _is_butterfly(parts):
        return False
    non2 = [x for x in parts if x != 2]
    return (bool(non2) and non2[-1] == h and _run_length(parts) >= h
            and len(non2) >= h + 1)


def _in_bar_b(parts, h):
    # exactly h consecutive largest parts, all greater than h + 1, and every
    # part other than 2 greater than h
    if h < 3 or not _is_butterfly(parts):
        return False
    non2 = [x for x in parts if x != 2]
    return (_run_length(parts) == h and parts[0] > 2 * h
            and bool(non2) and non2[-1] > h)


def _in_equal_triple(parts):
    # the triple value must be >= 3: it mirrors the middle part of a
    # butterfly head, whose smallest admissible value is 3
    if len(parts) < 3 or parts[0] != parts[1] or parts[1] != parts[2]:
        return False
    if parts[0] < 3 or parts[-1] < 2:
        return False
    rest = parts[2:]
    if not _is_strict(rest):
        return False
    return len(parts) == 3 or parts[3] <= parts[2] - 2


def _in_staircase_33(parts):
    if len(parts) < 3 or parts[0] != parts[1]:
        return False
    if parts[-1] != 3 or parts[-2] != 3:
        return False
    return all(a - b <= 1 for a, b in zip(parts, parts[1:]))


def _in_staircase_321(parts):
    if len(parts) < 4 or parts[0] != parts[1]:
        return False
    if parts[-1] != 1 or parts[-2] != 2 or parts[-3] != 3:
        return False
    return all(a - b <= 1 for a, b in zip(parts, parts[1:]))


def _in_butterfly_plus_ones(parts):
    ones = sum(1 for x in parts if x == 1)
    if ones > 2:
        return False
    return _is_butterfly(parts[:len(parts) - ones])


_POW2 = frozenset(1 << k for k in range(40))


def in_family(p: Partition, f: Family) -> bool:
    """Total membership predicate."""
    parts = p.parts
    kind = f.kind
    if kind == STRICT:
        return _is_strict(parts)
    if kind == CONSEC:
        return len(parts) >= 2 and _is_strict(parts) and parts[0] == parts[1] + 1
    if kind == CONSEC_NO_ONE:
        return in_family(p, Family(CONSEC)) and parts[-1] >= 2
    if kind == CONSEC_WITH_ONE:
        return in_family(p, Family(CONSEC)) and parts[-1] == 1
    if kind == CONSEC_ISOLATED:
        return (in_family(p, Family(CONSEC_NO_ONE))
                and (len(parts) < 3 or parts[1] >= parts[2] + 2))
    if kind == BUTTERFLY:
        return _is_butterfly(parts)
    if kind == BUTTERFLY_EVEN:
        return _is_butterfly(parts) and parts[1] % 2 == 0
    if kind == BUTTERFLY_ODD:
        return _is_butterfly(parts) and parts[1] % 2 == 1
    if kind == EQUAL_TRIPLE:
        return _in_equal_triple(parts)
    if kind == STAIRCASE_321:
        return _in_staircase_321(parts)
    if kind == STAIRCASE_33:
        return _in_staircase_33(parts)
    if kind == ODD_GE:
        return all(x % 2 == 1 and x >= f.param for x in parts)
    if kind in (ODD_STEP1, ODD_STEP2, ODD_STEP1_SWITCHED, ODD_STEP2_SWITCHED):
        from . import splitmerge
        form = {ODD_STEP1: splitmerge.STEP1, ODD_STEP2: splitmerge.STEP2,
                ODD_STEP1_SWITCHED: splitmerge.STEP1_SWITCHED,
                ODD_STEP2_SWITCHED: splitmerge.STEP2_SWITCHED}[kind]
        return splitmerge.matches_form(p, form)
    if kind == BAR_AE:
        return _in_bar_a(parts, f.param) and parts[1] % 2 == 0
    if kind == BAR_AO:
        return _in_bar_a(parts, f.param) and parts[1] % 2 == 1
    if kind == BAR_BE:
        return _in_bar_b(parts, f.param) and parts[1] % 2 == 0
    if kind == BAR_BO:
        return _in_bar_b(parts, f.param) and parts[1] % 2 == 1
    if kind == BUTTERFLY_PLUS_ONES:
        return _in_butterfly_plus_ones(parts)
    if kind == DISTINCT_NOT_POW2:
        return _is_strict(parts) and not any(x in _POW2 for x in parts)
    raise ValueError("unknown family %r" % (f,))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _iter_consec(n, tail_min):
    # head (a+1, a) with a >= tail_min, strict tail below a with parts >= tail_min
    for a in range((n - 1) // 2, tail_min - 1, -1):
        rest = n - 2 * a - 1
        if rest < 0:
            continue
        for tail in iter_strict_tuples(rest, a - 1, tail_min):
            yield (a + 1, a) + tail


def _iter_staircase_33(n):
    # top value v >= 3, every value in [3, v] present (steps <= 1), the top
    # value at least twice, the value 3 at least twice (three parts for v = 3)
    out = []

    def rec(j, remaining, acc, v):
        if j == 3:
            need = 3 if v == 3 else 2
            if remaining % 3 == 0 and remaining // 3 >= need:
                out.append(tuple(acc + [3] * (remaining // 3)))
            return
        min_below = sum(range(4, j)) + 6  # one of each value below, two 3s
        lo = 2 if j == v else 1
        for m in range(lo, (remaining - min_below) // j + 1):
            rec(j - 1, remaining - m * j, acc + [j] * m, v)

    for v in range(3, n + 1):
        rec(v, n, [], v)
    return out


def _iter_staircase_321(n):
    # fixed smallest parts 3 > 2 > 1; above them a staircase with steps <= 1
    # from some top value v (at least twice) down to 3 (at least once)
    out = []
    core = n - 3
    if core < 3:
        return out

    def rec(j, remaining, acc, v):
        if j == 3:
            need = 2 if v == 3 else 1
            if remaining % 3 == 0 and remaining // 3 >= need:
                out.append(tuple(acc + [3] * (remaining // 3) + [2, 1]))
            return
        min_below = sum(range(4, j)) + 3
        lo = 2 if j == v else 1
        for m in range(lo, (remaining - min_below) // j + 1):
            rec(j - 1, remaining - m * j, acc + [j] * m, v)

    for v in range(3, core + 1):
        rec(v, core, [], v)
    return out


def _iter_prop21(n):
    for ones in (0, 1, 2):
        if n - ones < 0:
            continue
        for core in iter_butterfly_tuples(n - ones):
            yield core + (1,) * ones


def enumerate_family(n, f: Family, limit=DEFAULT_ENUM_LIMIT):
    """All partitions of n in the family, lexicographically decreasing."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_limit(n, limit)
    kind = f.kind
    if kind == STRICT:
        tuples = iter_strict_tuples(n)
    elif kind == CONSEC:
        tuples = _iter_consec(n, 1)
    elif kind == CONSEC_NO_ONE:
        tuples = _iter_consec(n, 2)
    elif kind == CONSEC_WITH_ONE:
        tuples = (t for t in _iter_consec(n, 1) if t[-1] == 1)
    elif kind == CONSEC_ISOLATED:
        tuples = (t for t in _iter_consec(n, 2) if len(t) < 3 or t[1] >= t[2] + 2)
    elif kind == BUTTERFLY:
        tuples = iter_butterfly_tuples(n)
    elif kind == BUTTERFLY_EVEN:
        tuples = iter_butterfly_tuples(n, second_parity=0)
    elif kind == BUTTERFLY_ODD:
        tuples = iter_butterfly_tuples(n, second_parity=1)
    elif kind == EQUAL_TRIPLE:
        tuples = _iter_equal_triple(n)
    elif kind == STAIRCASE_321:
        tuples = _iter_staircase_321(n)
    elif kind == STAIRCASE_33:
        tuples = _iter_staircase_33(n)
    elif kind == ODD_GE:
        tuples = _iter_odd_parts(n, f.param)
    elif kind in (ODD_STEP1, ODD_STEP2, ODD_STEP1_SWITCHED, ODD_STEP2_SWITCHED):
        tuples = (t for t in _iter_odd_parts(n, 3)
                  if in_family(Partition(t), f))
    elif kind in (BAR_AE, BAR_AO, BAR_BE, BAR_BO):
        tuples = (t for t in iter_butterfly_tuples(n) if in_family(Partition(t), f))
    elif kind == BUTTERFLY_PLUS_ONES:
        tuples = _iter_prop21(n)
    elif kind == DISTINCT_NOT_POW2:
        allowed = [x for x in range(3, n + 1) if x not in _POW2]
        tuples = _iter_distinct_from(n, allowed)
    else:
        raise ValueError("unknown family %r" % (f,))
    result = sorted(tuples, reverse=True)
    return [Partition(t) for t in result]


def _iter_equal_triple(n):
    for a in range(n // 3, 2, -1):
        rest = n - 3 * a
        if rest == 0:
            yield (a, a, a)
            continue
        for tail in iter_strict_tuples(rest, a - 2, 2):
            yield (a, a, a) + tail


def _iter_odd_parts(n, bound, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    top = min(n, max_part)
    if top % 2 == 0:
        top -= 1
    for first in range(top, bound - 1, -2):
        for rest in _iter_odd_parts(n - first, bound, first):
            yield (first,) + rest


def _iter_distinct_from(n, allowed, idx=None):
    # allowed is ascending; choose largest-first for lex-descending output
    if idx is None:
        idx = len(allowed)
    if n == 0:
        yield ()
        return
    for i in range(idx - 1, -1, -1):
        x = allowed[i]
        if x > n or sum(allowed[:i]) < n - x:
            continue
        for rest in _iter_distinct_from(n - x, allowed, i):
            yield (x,) + rest


def count_family(n, f: Family, limit=DEFAULT_ENUM_LIMIT) -> int:
    """len(enumerate_family(n, f)), via exact counting where available."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_limit(n, limit)
    kind = f.kind
    if kind == STRICT:
        return pt.count_strict_table(n)[n]
    if kind == ODD_GE:
        return pt.count_odd_ge_table(n, f.param)[n]
    if kind == BUTTERFLY:
        return pt.count_butterfly(n)
    if kind == BUTTERFLY_EVEN:
        return pt.count_butterfly(n, second_parity=0)
    if kind == BUTTERFLY_ODD:
        return pt.count_butterfly(n, second_parity=1)
    if kind == DISTINCT_NOT_POW2:
        allowed = [x for x in range(3, n + 1) if x not in _POW2]
        return pt.count_distinct_with_parts(n, allowed)[n]
    return len(enumerate_family(n, f, limit))
