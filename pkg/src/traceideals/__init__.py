"""Trace ideals of numerical semigroup rings, computed on monomial ideals."""

from .semigroup import (
    GuardExceeded,
    NumericalSemigroup,
    SemigroupError,
    semigroup_from_generators,
)
from .ideals import (
    IdealError,
    RelativeIdeal,
    TraceReport,
    analyze,
    canonical_ideal,
    colon,
    conductor_ideal,
    dual,
    dual_power_chain,
    end_semigroup,
    ideal_from_generators,
    ideal_sum,
    integral_closure,
    intersect,
    is_integrally_closed,
    is_reflexive,
    is_trace,
    maximal_ideal,
    principal,
    product,
    reflexive_hull,
    shift,
    star,
    subtrace,
    trace,
)
from .enumeration import (
    ClassificationVerdict,
    EnumerationResult,
    check_duality,
    classify,
    enumerate_oversemigroups,
    enumerate_semigroups_by_genus,
    enumerate_trace_ideals,
)

__all__ = [name for name in dir() if not name.startswith("_")]
