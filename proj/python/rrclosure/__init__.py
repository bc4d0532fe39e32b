"""Ratliff-Rush closure of <x,y>-primary monomial ideals in K[x,y].

Ideals are passed and returned as lists of (a, b) exponent pairs standing for
the monomials x^a y^b.
"""

from ._core import (
    ClosureReport,
    HypothesisViolated,
    QuickCheck,
    check_hypothesis,
    closure,
    colon,
    colon_chain,
    contains,
    decomposition_check,
    enumerate_s,
    enumerate_t,
    family_crispin,
    family_generator_gap,
    family_mk,
    family_sigma,
    family_three,
    family_two,
    integral_closure_box,
    intersect,
    is_ratliff_rush,
    multiply,
    normalize,
    parse_ideal,
    format_ideal,
    power,
    powers_rr_check,
    q_bounds,
    quick_sufficient_check,
    reduction_bound,
    rr_closure_oracle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
