"""Butterfly sequence toolkit.

The butterfly sequence is the second difference of the strict-partition
counts; from n = 6 on it counts the strict partitions with at least three
parts, the three largest consecutive, and no part 1.  This package computes
the sequence and its relatives several independent ways (family enumeration,
exact series expansion, pentagonal/triangular recurrences), implements the
bijections and the odd-part splitting/merging correspondence behind those
identities, and cross-checks every route against the others.
"""

from .bijections import (
    BijectionReport,
    bar_backward,
    bar_forward,
    butterfly_backward,
    butterfly_forward,
    lower_largest,
    raise_largest,
    verify_bijection,
)
from .diagrams import render_young
from .families import Family, count_family, enumerate_family, in_family
from .partitions import EnumerationLimitError, Partition
from .pentagonal import (
    ParityRefinedCounts,
    ParityWitness,
    PentClass,
    classify,
    parity_refined_counts,
    enumerate_bars,
    make_pentagonal,
    parity_relation,
    parity_relation_holds,
)
from .recurrences import (
    checksum,
    expected_checksum,
    recur_value,
    recursive_solve,
    triangular_value,
    validate_route,
)
from .sequences import (
    SequenceTable,
    difference,
    mod3_slices,
    named_sequence,
    parity_exception_inputs,
    to_bfile,
    to_json,
)
from .series import (
    IDENTITIES,
    TruncSeries,
    div_exact,
    expand_product,
    filtered_series,
    filtration_term,
    theta_pentagonal,
    theta_triangular,
    verify_all,
    verify_identity,
)
from .splitmerge import (
    CapsError,
    MergeCaps,
    ShapeError,
    caps_of,
    count_capped,
    merge_odd,
    split,
    split_even,
    split_odd,
    split_switched,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
