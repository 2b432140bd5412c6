"""Integer partitions: the core value type plus exhaustive enumerators and counters.

Everything downstream (families, sequences, bijections, splitting/merging)
works on the Partition type defined here.  The enumerators are deliberately
simple backtracking generators so they can serve as the brute-force oracle
that the faster counting routines and the series algebra are tested against.
"""

from functools import lru_cache

# Desk-scale guard: enumeration is refused above this n unless the caller
# overrides it explicitly.
DEFAULT_ENUM_LIMIT = 200


class EnumerationLimitError(ValueError):
    """Raised when an enumeration request exceeds the configured size limit."""


class Partition:
    """A partition of a nonnegative integer: a non-increasing tuple of positive parts.

    The empty partition (of 0) is valid.  Instances are immutable by
    convention, hashable, and ordered by their part tuples so that sorting a
    list of partitions with ``reverse=True`` yields lexicographically
    decreasing order.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(x) for x in parts)
        for i, x in enumerate(parts):
            if x < 1:
                raise ValueError("parts must be positive integers: %r" % (parts,))
            if i and parts[i - 1] < x:
                raise ValueError("parts must be non-increasing: %r" % (parts,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def n(self):
        """Sum of the parts."""
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition(%r)" % list(self.parts)

    def __str__(self):
        return "+".join(str(x) for x in self.parts)

    @classmethod
    def parse(cls, text):
        """Parse the "+"-joined form, e.g. ``"7+6+5"``.  Empty string gives ()."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(sorted((int(tok) for tok in text.split("+")), reverse=True))

    def is_strict(self):
        """True when all parts are distinct."""
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def min_part(self):
        return self.parts[-1] if self.parts else 0

    def max_part(self):
        return self.parts[0] if self.parts else 0

    def consecutive_run(self):
        """Length of the maximal initial run of consecutive decreasing parts."""
        if not self.parts:
            return 0
        run = 1
        while run < len(self.parts) and self.parts[run] == self.parts[run - 1] - 1:
            run += 1
        return run


def check_limit(n, limit=DEFAULT_ENUM_LIMIT):
    if limit is not None and n > limit:
        raise EnumerationLimitError(
            "enumeration at n=%d exceeds the limit %d; pass a larger limit to override"
            % (n, limit)
        )


# ---------------------------------------------------------------------------
# Backtracking enumerators.  All yield tuples in lexicographically decreasing
# order (largest first part first, then recursively on the remainder).
# ---------------------------------------------------------------------------

def iter_partition_tuples(n, max_part=None, min_part=1):
    """All partitions of n with parts in [min_part, max_part], largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        for rest in iter_partition_tuples(n - first, first, min_part):
            yield (first,) + rest


def iter_strict_tuples(n, max_part=None, min_part=1):
    """All strict (distinct-part) partitions of n, parts in [min_part, max_part]."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    top = min(n, max_part)
    for first in range(top, min_part - 1, -1):
        rest_max = first - 1
        # prune: remaining sum must fit below 'first' with distinct parts
        reachable = (rest_max + min_part) * (rest_max - min_part + 1) // 2
        if n - first > max(reachable, 0):
            continue
        for rest in iter_strict_tuples(n - first, rest_max, min_part):
            yield (first,) + rest


def iter_butterfly_tuples(n, second_parity=None):
    """Strict partitions of n with >= 3 parts, the three largest consecutive,
    and smallest part >= 2.

    ``second_parity`` of 0 (even) or 1 (odd) filters on the parity of the
    second-largest part.
    """
    # head (a+2, a+1, a), tail strict within [2, a-1]
    a_max = (n - 3) // 3
    for a in range(a_max, 1, -1):
        rest = n - 3 * a - 3
        if rest < 0:
            continue
        if second_parity is not None and (a + 1) % 2 != second_parity:
            continue
        reachable = (a + 1) * (a - 2) // 2  # sum of 2..a-1
        if rest > max(reachable, 0):
            continue
        head = (a + 2, a + 1, a)
        for tail in iter_strict_tuples(rest, a - 1, 2):
            yield head + tail


# ---------------------------------------------------------------------------
# Exact counting (dynamic programming).  These are independent of the series
# and recurrence machinery, so they can stand as oracles at sizes where
# listing every partition would be wasteful.
# ---------------------------------------------------------------------------

def count_partitions_table(N):
    """[p(0..N)]: unrestricted partition counts."""
    c = [1] + [0] * N
    for part in range(1, N + 1):
        for j in range(part, N + 1):
            c[j] += c[j - part]
    return c


def count_with_parts(N, parts):
    """Counts of partitions of 0..N with parts drawn (with repetition) from ``parts``."""
    c = [1] + [0] * N
    for part in parts:
        if part > N:
            continue
        for j in range(part, N + 1):
            c[j] += c[j - part]
    return c


def count_distinct_with_parts(N, parts):
    """Counts of partitions of 0..N into distinct parts drawn from ``parts``."""
    c = [1] + [0] * N
    for part in parts:
        if part > N:
            continue
        for j in range(N, part - 1, -1):
            c[j] += c[j - part]
    return c


def count_strict_table(N):
    """[q(0..N)]: distinct-part partition counts."""
    return count_distinct_with_parts(N, range(1, N + 1))


def count_odd_ge_table(N, bound):
    """Counts of partitions of 0..N into odd parts >= bound."""
    return count_with_parts(N, range(bound, N + 1, 2))


def count_no_ones_table(N):
    """Counts of partitions of 0..N with no part equal to 1."""
    return count_with_parts(N, range(2, N + 1))


def count_no_ones_repeated_top_table(N):
    """Counts of partitions with no part 1 and the largest part occurring at
    least twice (the empty partition counts for n = 0)."""

    @lru_cache(maxsize=None)
    def bounded(m, cap):
        # partitions of m with parts in [2, cap]
        if m == 0:
            return 1
        if cap < 2 or m < 2:
            return 0
        total = 0
        for part in range(2, min(m, cap) + 1):
            total += bounded(m - part, part)
        return total

    out = [1] + [0] * N
    for n in range(4, N + 1):
        total = 0
        for j in range(2, n // 2 + 1):
            total += bounded(n - 2 * j, j)
        out[n] = total
    return out


@lru_cache(maxsize=None)
def _strict_bounded_count(m, top, low):
    """Number of strict partitions of m with parts in [low, top]."""
    if m == 0:
        return 1
    if top < low or m < low:
        return 0
    reachable = (top + low) * (top - low + 1) // 2
    if m > reachable:
        return 0
    # largest part is 'top' or everything fits below it
    return _strict_bounded_count(m - top, top - 1, low) + _strict_bounded_count(m, top - 1, low)


def count_butterfly(n, second_parity=None):
    """Number of butterfly partitions of n (optionally filtered by the parity
    of the second-largest part), without listing them."""
    total = 0
    for a in range(2, (n - 3) // 3 + 1):
        if second_parity is not None and (a + 1) % 2 != second_parity:
            continue
        rest = n - 3 * a - 3
        if rest < 0:
            continue
        total += _strict_bounded_count(rest, a - 1, 2)
    return total
