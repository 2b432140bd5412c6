"""The three explicit bijections and a range verifier.

* raise_largest: strict partitions of n-1 <-> strict partitions of n whose
  two largest parts differ by at least 2 (add one unit to the largest part).
* butterfly_forward: consecutive-pair partitions of n-1 with smallest part 1
  <-> consecutive-pair partitions of n with no 1 and the pair isolated
  (drop the 1, add one unit to each of the two largest parts).
* bar_forward: horizontal-bar partitions <-> vertical-bar partitions at the
  same n (remove the part h, add one unit to each of the h largest parts);
  the parity of the second-largest part flips.
"""

from dataclasses import dataclass

from .families import (
    BAR_AE,
    BAR_AO,
    BAR_BE,
    BAR_BO,
    CONSEC_ISOLATED,
    CONSEC_WITH_ONE,
    STRICT,
    Family,
    enumerate_family,
    in_family,
)
from .partitions import Partition


class BijectionError(ValueError):
    pass


def raise_largest(p: Partition) -> Partition:
    if len(p) == 0:
        raise BijectionError("empty partition has no largest part")
    if not p.is_strict():
        raise BijectionError("input must be strict: %s" % p)
    return Partition((p[0] + 1,) + p.parts[1:])


def lower_largest(p: Partition) -> Partition:
    if len(p) == 0 or p[0] == 1:
        raise BijectionError("no unit to remove from the largest part: %s" % p)
    if not p.is_strict() or (len(p) >= 2 and p[0] - p[1] < 2):
        raise BijectionError("two largest parts must differ by at least 2: %s" % p)
    return Partition((p[0] - 1,) + p.parts[1:])


def butterfly_forward(p: Partition) -> Partition:
    """Drop the smallest part 1, then add one unit to each of the two largest."""
    if len(p) < 3 or not in_family(p, Family(CONSEC_WITH_ONE)):
        raise BijectionError(
            "input must have >= 3 parts, two largest consecutive, smallest 1: %s" % p)
    rest = p.parts[:-1]
    return Partition((rest[0] + 1, rest[1] + 1) + rest[2:])


def butterfly_backward(p: Partition) -> Partition:
    if not in_family(p, Family(CONSEC_ISOLATED)) or len(p) < 2:
        raise BijectionError("input must be a consecutive-pair partition with the "
                             "pair isolated and no part 1: %s" % p)
    return Partition((p[0] - 1, p[1] - 1) + p.parts[2:] + (1,))


def bar_forward(p: Partition, h: int) -> Partition:
    """Remove the part equal to h, add one unit to each of the h largest parts."""
    if h < 3:
        raise BijectionError("h must be >= 3")
    if not (in_family(p, Family(BAR_AE, h)) or in_family(p, Family(BAR_AO, h))):
        raise BijectionError("input is not a horizontal-bar-%d partition: %s" % (h, p))
    parts = list(p.parts)
    parts.remove(h)
    for i in range(h):
        parts[i] += 1
    return Partition(parts)


def bar_backward(p: Partition, h: int) -> Partition:
    if h < 3:
        raise BijectionError("h must be >= 3")
    if not (in_family(p, Family(BAR_BE, h)) or in_family(p, Family(BAR_BO, h))):
        raise BijectionError("input is not a vertical-bar-%d partition: %s" % (h, p))
    parts = list(p.parts)
    for i in range(h):
        parts[i] -= 1
    parts.append(h)
    parts.sort(reverse=True)
    return Partition(parts)


@dataclass(frozen=True)
class BijectionReport:
    kind: str
    n_range: tuple
    checked: int
    passed: bool
    failures: tuple  # (n, description) pairs, first few

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        body = "%s bijection on n=%d..%d: %s (%d maps checked)" % (
            self.kind, self.n_range[0], self.n_range[1], status, self.checked)
        for n, msg in self.failures[:3]:
            body += "\n  n=%d: %s" % (n, msg)
        return body


def _strict_gap_target(n):
    out = [p for p in enumerate_family(n, Family(STRICT))
           if len(p) < 2 or p[0] - p[1] >= 2]
    return out


def verify_bijection(kind, lo, hi, h=3) -> BijectionReport:
    """Check forward/backward inversion, injectivity, family membership and
    count agreement for every n in [lo, hi]."""
    failures = []
    checked = 0
    for n in range(lo, hi + 1):
        if kind == "raise":
            source = enumerate_family(n - 1, Family(STRICT))
            source = [p for p in source if len(p) > 0]
            target = [p for p in _strict_gap_target(n) if len(p) > 0]
            fwd, back = raise_largest, lower_largest
            member = lambda img, src=None: (img.n == n and img.is_strict()
                                            and (len(img) < 2 or img[0] - img[1] >= 2))
        elif kind == "butterfly":
            source = enumerate_family(n - 1, Family(CONSEC_WITH_ONE))
            target = enumerate_family(n, Family(CONSEC_ISOLATED))
            fwd, back = butterfly_forward, butterfly_backward
            member = lambda img, src=None: (img.n == n
                                            and in_family(img, Family(CONSEC_ISOLATED)))
        elif kind == "bar":
            ae = enumerate_family(n, Family(BAR_AE, h))
            ao = enumerate_family(n, Family(BAR_AO, h))
            be = enumerate_family(n, Family(BAR_BE, h))
            bo = enumerate_family(n, Family(BAR_BO, h))
            source = ae + ao
            target = be + bo
            fwd = lambda p: bar_forward(p, h)
            back = lambda p: bar_backward(p, h)
            ae_set = set(ae)
            # the image family swaps the parity of the second-largest part
            member = lambda img, src=None: img.n == n and in_family(
                img, Family(BAR_BO if src in ae_set else BAR_BE, h))
            if len(ae) != len(bo) or len(ao) != len(be):
                failures.append((n, "parity-swapped cardinalities differ"))
        else:
            raise ValueError("unknown bijection kind %r" % kind)

        images = []
        for p in source:
            try:
                img = fwd(p)
            except BijectionError as exc:
                failures.append((n, "forward failed on %s: %s" % (p, exc)))
                continue
            checked += 1
            if not member(img, p):
                failures.append((n, "image %s of %s outside the target family" % (img, p)))
            if back(img) != p:
                failures.append((n, "backward did not recover %s" % p))
            images.append(img)
        if len(set(images)) != len(images):
            failures.append((n, "forward map is not injective"))
        if len(source) != len(target):
            failures.append((n, "count mismatch: %d sources vs %d targets"
                             % (len(source), len(target))))
    return BijectionReport(kind, (lo, hi), checked, not failures, tuple(failures))
