"""Lusztig's explicit map from the partition set X_n (spin-group unipotent
classes carrying the non-SO-equivariant local systems) to bipartitions, the
dominance orders on both sides, and exhaustive checks relating them."""

from .lusztig import (
    T0_KEEP,
    T0_SWAP,
    DeltaProfile,
    SpringerImage,
    brute_force_inverse,
    closed_form_inverse,
    delta,
    delta_profile,
    forward_map,
    inverse,
    odd_even_split,
)
from .orders import (
    OrderRelation,
    compare,
    djm_leq,
    dominance_leq,
    hasse_edges,
    induced_leq,
)
from .partitions import (
    Bipartition,
    CapExceededError,
    Partition,
    XnElement,
    enumerate_bipartitions,
    enumerate_partitions,
    enumerate_Xn,
    is_in_Xn,
    parse_bipartition,
    parse_partition,
    partition_new,
)
from .verify import (
    VerificationReport,
    reproduce_counterexample,
    scan_threshold,
    verify_bijection,
    verify_lemma1,
    verify_lemma2,
    verify_theorem,
)

__version__ = "0.1.0"
