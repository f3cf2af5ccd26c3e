"""Seshadri constants and negative curves on blown-up ruled surfaces."""

from ._hirz import (
    SCHEMA_VERSION,
    DivisorClass,
    HirzError,
    HypothesisError,
    InvariantViolation,
    SurfaceContext,
    UnsupportedRangeError,
    UsageError,
    arithmetic_genus,
    canonical_class,
    enumerate_classes,
    h0,
    intersect,
    run_check,
    run_job,
    self_intersection,
    seshadri,
    seshadri_ruled,
    wbnc_bound,
)

__all__ = [
    "SCHEMA_VERSION",
    "DivisorClass",
    "HirzError",
    "HypothesisError",
    "InvariantViolation",
    "SurfaceContext",
    "UnsupportedRangeError",
    "UsageError",
    "arithmetic_genus",
    "canonical_class",
    "enumerate_classes",
    "h0",
    "intersect",
    "run_check",
    "run_job",
    "self_intersection",
    "seshadri",
    "seshadri_ruled",
    "wbnc_bound",
]
