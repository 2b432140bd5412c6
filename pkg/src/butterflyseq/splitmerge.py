"""Splitting butterfly partitions into odd-part partitions and merging back.

A butterfly partition (distinct parts, at least three, the three largest
consecutive, smallest part >= 2) is mapped to a partition with odd parts
>= 3.  The three consecutive parts become the head of the odd partition, the
power-of-two parts are folded into the largest odd part, and the remaining
even parts are Euler-split.  Merging inverts this, and is only well defined
when the "merging caps" hold: every power of two recreated from the head gap
and every merged repeated odd part must stay strictly below the third part of
the butterfly partition.

Two variants exist.  Under the standard variant, butterflies with an even
second part map to the form with equal second and third odd parts and a
mandatory smallest part 3 (the sentinel), and butterflies with an odd second
part map to the form whose second part exceeds the third by two, with no
sentinel.  The switched variant exchanges the two target shapes (the even
route then carries the sentinel on the gap-two shape).  For the smallest
heads (second part 4) the switched even route coincides with the standard
one, which keeps the correspondence total.
"""

from dataclasses import dataclass, field

from .partitions import Partition

STANDARD = "standard"
SWITCHED = "switched"

STEP1 = "step1"
STEP2 = "step2"
STEP1_SWITCHED = "step1_switched"
STEP2_SWITCHED = "step2_switched"

# form -> (sentinel carried, head-gap rule, cap bound as offset from q3)
_FORM_SENTINEL = {STEP1: True, STEP2: False, STEP1_SWITCHED: True, STEP2_SWITCHED: False}
_FORM_GAP2 = {STEP1: False, STEP2: True, STEP1_SWITCHED: True, STEP2_SWITCHED: False}
_FORM_BOUND_OFFSET = {STEP1: -1, STEP2: 0, STEP1_SWITCHED: 1, STEP2_SWITCHED: -2}

# switched even-route specials: images of the two butterflies with head 5>4>3
_SWITCHED_EVEN_SPECIALS = {(3, 3, 3, 3), (5, 3, 3, 3)}


class SplitMergeError(ValueError):
    pass


class ShapeError(SplitMergeError):
    """The odd partition does not match any routed form."""


class CapsError(SplitMergeError):
    """A merging cap is violated; the partition is outside the bijection's range."""


def _pow2_floor(x):
    return 1 << (x.bit_length() - 1)


@dataclass(frozen=True)
class MergeCaps:
    """Cap report for an odd-part partition routed to one of the four forms.

    ``two_t`` is the head gap (sum of power-of-two parts to recreate),
    ``u_by_q`` the tail multiplicity of each odd value >= 5, ``v`` the tail
    multiplicity of 3 after setting the sentinel aside where the form carries
    one.  ``largest_pows`` records, for each nonzero quantity, the largest
    power of two at or below it; ``checks`` holds one boolean per applicable
    cap (a zero quantity has no cap, so it never appears).
    """

    form: str
    bound: int
    two_t: int
    u_by_q: dict
    v: int
    largest_pows: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    @property
    def satisfied(self):
        return all(self.checks.values())


def caps_of(q: Partition, variant=STANDARD, form=None) -> MergeCaps:
    """Evaluate the merging caps of ``q`` against a routed form.

    The form is inferred from the head shape when not given.  All
    comparisons are exact integer arithmetic.
    """
    parts = q.parts
    if any(x % 2 == 0 or x < 3 for x in parts):
        raise ShapeError("parts must be odd and >= 3: %s" % q)
    if form is None:
        form = _route(parts, variant)
    if form not in _FORM_SENTINEL:
        raise ShapeError("unknown form %r" % form)
    if len(parts) < 3:
        raise ShapeError("need at least three parts: %s" % q)
    if form == STEP1_SWITCHED and parts in _SWITCHED_EVEN_SPECIALS:
        # the switched even route coincides with the standard one on these,
        # so the standard geometry applies
        inner = caps_of(q, STANDARD, STEP1)
        return MergeCaps(form=form, bound=inner.bound, two_t=inner.two_t,
                         u_by_q=inner.u_by_q, v=inner.v,
                         largest_pows=inner.largest_pows, checks=inner.checks)
    q1, q2, q3 = parts[0], parts[1], parts[2]
    if _FORM_GAP2[form]:
        if q2 != q3 + 2 or q1 < q2 + 2:
            raise ShapeError("head does not match the gap-two form: %s" % q)
        two_t = q1 - q2 - 2
    else:
        if q2 != q3:
            raise ShapeError("head does not match the equal-pair form: %s" % q)
        two_t = q1 - q2
    tail = list(parts[3:])
    if _FORM_SENTINEL[form]:
        if 3 not in tail:
            raise ShapeError("form requires a smallest part 3: %s" % q)
        tail.remove(3)
    u_by_q = {}
    v = 0
    for x in tail:
        if x == 3:
            v += 1
        else:
            u_by_q[x] = u_by_q.get(x, 0) + 1
    bound = q3 + _FORM_BOUND_OFFSET[form]

    largest_pows = {}
    checks = {}
    if two_t > 0:
        largest_pows["2t"] = _pow2_floor(two_t)
        checks["2t"] = largest_pows["2t"] <= bound
    for val in sorted(u_by_q):
        key = "u:%d" % val
        largest_pows[key] = _pow2_floor(u_by_q[val])
        checks[key] = val * largest_pows[key] <= bound
    if v > 0:
        largest_pows["v"] = _pow2_floor(v)
        checks["v"] = 3 * largest_pows["v"] <= bound
    return MergeCaps(form=form, bound=bound, two_t=two_t, u_by_q=u_by_q, v=v,
                     largest_pows=largest_pows, checks=checks)


def _route(parts, variant):
    """Pick the routed form from the head shape (merge-side dispatch)."""
    if len(parts) < 3:
        raise ShapeError("need at least three parts")
    q2, q3 = parts[1], parts[2]
    if variant == STANDARD:
        if parts == (3, 3, 3):
            return STEP2
        if q2 == q3:
            return STEP1
        if q2 == q3 + 2:
            return STEP2
    elif variant == SWITCHED:
        if parts in _SWITCHED_EVEN_SPECIALS:
            return STEP1_SWITCHED
        if q2 == q3:
            return STEP2_SWITCHED
        if q2 == q3 + 2:
            return STEP1_SWITCHED
    else:
        raise ValueError("unknown variant %r" % variant)
    raise ShapeError("head shape matches neither routed form: %s" % Partition(parts))


# ---------------------------------------------------------------------------
# Splitting
# ---------------------------------------------------------------------------

def _require_butterfly(p: Partition):
    parts = p.parts
    ok = (len(parts) >= 3 and p.is_strict() and parts[-1] >= 2
          and parts[0] == parts[1] + 1 == parts[2] + 2)
    if not ok:
        raise SplitMergeError("not a butterfly partition: %s" % p)


def _split_tail(tail):
    """Fold power-of-two parts into 2t, Euler-split even non-powers of two."""
    two_t = 0
    odd = []
    for x in tail:
        if x % 2 == 1:
            odd.append(x)
        elif x & (x - 1) == 0:
            two_t += x
        else:
            val = x
            exp = 0
            while val % 2 == 0:
                val //= 2
                exp += 1
            odd.extend([val] * (1 << exp))
    return two_t, odd


def _assemble(head, odd_tail, sentinel):
    parts = list(head) + list(odd_tail) + ([3] if sentinel else [])
    parts.sort(reverse=True)
    return Partition(parts)


def split_even(p: Partition) -> Partition:
    """Standard split of a butterfly partition with even second part."""
    _require_butterfly(p)
    if p[1] % 2 != 0:
        raise SplitMergeError("second part must be even: %s" % p)
    m = p[1] // 2
    two_t, odd_tail = _split_tail(p.parts[3:])
    out = _assemble((2 * m - 1 + two_t, 2 * m - 1, 2 * m - 1), odd_tail, sentinel=True)
    assert out.n == p.n
    return out


def split_odd(p: Partition) -> Partition:
    """Standard split of a butterfly partition with odd second part."""
    _require_butterfly(p)
    if p[1] % 2 != 1:
        raise SplitMergeError("second part must be odd: %s" % p)
    if p.parts == (4, 3, 2):
        return Partition((3, 3, 3))
    m = (p[1] + 1) // 2
    two_t, odd_tail = _split_tail(p.parts[3:])
    out = _assemble((2 * m + 1 + two_t, 2 * m - 1, 2 * m - 3), odd_tail, sentinel=False)
    assert out.n == p.n
    return out


def split_switched(p: Partition) -> Partition:
    """Split under the switched variant (shapes of the two routes exchanged)."""
    _require_butterfly(p)
    if p[1] % 2 == 0:
        m = p[1] // 2
        if m == 2:
            # head 5>4>3: the gap-two shape would need a part below 3, so the
            # switched route coincides with the standard one here
            return split_even(p)
        two_t, odd_tail = _split_tail(p.parts[3:])
        out = _assemble((2 * m + 1 + two_t, 2 * m - 1, 2 * m - 3), odd_tail, sentinel=True)
    else:
        m = (p[1] + 1) // 2
        two_t, odd_tail = _split_tail(p.parts[3:])
        out = _assemble((2 * m - 1 + two_t, 2 * m - 1, 2 * m - 1), odd_tail, sentinel=False)
    assert out.n == p.n
    return out


def split(p: Partition, variant=STANDARD) -> Partition:
    if variant == STANDARD:
        return split_even(p) if p[1] % 2 == 0 else split_odd(p)
    if variant == SWITCHED:
        return split_switched(p)
    raise ValueError("unknown variant %r" % variant)


# ---------------------------------------------------------------------------
# Merging
# ---------------------------------------------------------------------------

def merge_odd(q: Partition, variant=STANDARD) -> Partition:
    """Reconstruct the unique butterfly partition whose split (under the
    matching variant) equals ``q``.

    Raises CapsError when a merging cap fails and ShapeError when the head
    matches neither routed form; a reconstruction that is not strictly
    decreasing signals an input outside the bijection's range and also raises.
    """
    parts = q.parts
    if any(x % 2 == 0 or x < 3 for x in parts):
        raise ShapeError("parts must be odd and >= 3: %s" % q)
    if variant == STANDARD and parts == (3, 3, 3):
        return Partition((4, 3, 2))

    form = _route(parts, variant)
    caps = caps_of(q, variant, form)
    if not caps.satisfied:
        raise CapsError("merging caps violated for %s: %s" % (q, caps.checks))

    if parts in _SWITCHED_EVEN_SPECIALS and variant == SWITCHED:
        m = 2
        head = (5, 4, 3)
        two_t = parts[0] - 3
    elif form in (STEP1, STEP1_SWITCHED):
        m = (parts[1] + 1) // 2
        head = (2 * m + 1, 2 * m, 2 * m - 1)
        two_t = caps.two_t
    else:
        m = (parts[1] + 1) // 2
        head = (2 * m, 2 * m - 1, 2 * m - 2)
        two_t = caps.two_t

    out = list(head)
    bit = 1
    while bit <= two_t:
        if two_t & bit:
            out.append(bit)
        bit <<= 1
    for val, count in list(caps.u_by_q.items()) + ([(3, caps.v)] if caps.v else []):
        exp = 0
        while count:
            if count & 1:
                out.append(val << exp)
            count >>= 1
            exp += 1
    out.sort(reverse=True)
    if any(a <= b for a, b in zip(out, out[1:])) or out[-1] < 2:
        raise CapsError("reconstruction is not strictly decreasing: %s" % out)
    result = Partition(out)
    if result.n != q.n or split(result, variant) != q:
        raise SplitMergeError("merge did not invert the split for %s" % q)
    return result


# ---------------------------------------------------------------------------
# Form membership and capped counting
# ---------------------------------------------------------------------------

def matches_form(q: Partition, form) -> bool:
    """Total membership test for the four odd-part target forms (caps included)."""
    parts = q.parts
    if len(parts) < 3 or any(x % 2 == 0 or x < 3 for x in parts):
        return False
    q1, q2, q3 = parts[0], parts[1], parts[2]
    q4 = parts[3] if len(parts) > 3 else None

    if form == STEP1:
        if len(parts) < 4 or parts[-1] != 3 or q2 != q3:
            return False
        if q4 is not None and q3 <= q4 and not (q2 == q3 == q4 == 3):
            return False
    elif form == STEP2:
        if parts == (3, 3, 3):
            return True
        if q1 < q2 + 2 or q2 != q3 + 2:
            return False
    elif form == STEP1_SWITCHED:
        if parts in _SWITCHED_EVEN_SPECIALS:
            return True
        if len(parts) < 4 or parts[-1] != 3 or q1 < q2 + 2 or q2 != q3 + 2:
            return False
    elif form == STEP2_SWITCHED:
        if q2 != q3:
            return False
        if q4 is not None and q3 <= q4 and not (q2 == q3 == q4 == 3):
            return False
    else:
        raise ValueError("unknown form %r" % form)
    try:
        return caps_of(q, form=form).satisfied
    except ShapeError:
        return False


def count_capped(n, variant=STANDARD):
    """Counts of odd-part partitions of n matching the variant's two routed
    forms with all caps satisfied, as (even-route count, odd-route count)."""
    if variant == STANDARD:
        even_form, odd_form = STEP1, STEP2
    elif variant == SWITCHED:
        even_form, odd_form = STEP1_SWITCHED, STEP2_SWITCHED
    else:
        raise ValueError("unknown variant %r" % variant)
    n_even = n_odd = 0
    for parts in _iter_odd_ge3(n):
        q = Partition(parts)
        if matches_form(q, even_form):
            n_even += 1
        if matches_form(q, odd_form):
            n_odd += 1
    return n_even, n_odd


def _iter_odd_ge3(n, max_part=None):
    """Partitions of n into odd parts >= 3, lexicographically decreasing."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    top = min(n, max_part)
    if top % 2 == 0:
        top -= 1
    for first in range(top, 2, -2):
        for rest in _iter_odd_ge3(n - first, first):
            yield (first,) + rest
