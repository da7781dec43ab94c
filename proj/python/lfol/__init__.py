"""Lock-free ordered list variants, benchmarks and verification helpers."""

from ._lfol import (
    CSV_HEADER,
    KEY_MAX,
    KEY_MIN,
    Context,
    HistoryTooLarge,
    OrderedSet,
    check_linearizable,
    fetch_or_lowering,
    oracle_replay,
    run_benchmark,
    stress,
    variants,
)

__all__ = [
    "CSV_HEADER",
    "KEY_MAX",
    "KEY_MIN",
    "Context",
    "HistoryTooLarge",
    "OrderedSet",
    "check_linearizable",
    "fetch_or_lowering",
    "oracle_replay",
    "run_benchmark",
    "stress",
    "variants",
]
