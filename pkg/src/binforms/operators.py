"""The two weight ladder operators on coefficient polynomials.

For a form of order n these are the first-order differential operators

    lowering = a0 d/da1 + 2 a1 d/da2 + ... + n a(n-1) d/dan
    raising  = n a1 d/da0 + (n-1) a2 d/da1 + ... + an d/da(n-1)

Both preserve the degree g of a homogeneous polynomial; `lowering` shifts
the weight p to p - 1 and `raising` shifts it to p + 1. Together they
generate the coefficient action of the unimodular substitutions, and a
homogeneous isobaric polynomial with n*g = 2*p is an invariant of the
form exactly when the lowering operator annihilates it (the discovery
module builds on that criterion).

On a homogeneous isobaric polynomial P of degree g and weight p the
operators obey the commutator identity

    (lowering raising - raising lowering) P = (n*g - 2*p) P

and, for k-fold powers,

    (lowering^k raising - raising lowering^k) P
        = k (n*g - 2*p + k - 1) lowering^(k-1) P
    (lowering raising^k - raising^k lowering) P
        = k (n*g - 2*p - k + 1) raising^(k-1) P

The residual helpers below compute "left side minus right side" of these
identities, so a correct run returns the zero polynomial; they back the
verification suite and the CLI `commutator` command. The scalar n*g - 2*p
always uses the grading of the polynomial as supplied, never of an
intermediate image.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from ._backend import kernels
from .algebra import CoeffPolynomial, GradedAnalysis, analyze


class LadderOp(Enum):
    """The two operators; values double as CLI tokens."""

    LOWERING = "d"
    RAISING = "delta"


@lru_cache(maxsize=None)
def _lowering_rules(n: int):
    return tuple((i, i - 1, i) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def _raising_rules(n: int):
    return tuple((i, i + 1, n - i) for i in range(n))


def lowering(p: CoeffPolynomial) -> CoeffPolynomial:
    """Apply the weight-lowering operator; nonzero images drop from weight p to p - 1."""
    return CoeffPolynomial._raw(p.n, kernels.ladder_apply(p._terms, _lowering_rules(p.n)))


def raising(p: CoeffPolynomial) -> CoeffPolynomial:
    """Apply the weight-raising operator; nonzero images climb from weight p to p + 1."""
    return CoeffPolynomial._raw(p.n, kernels.ladder_apply(p._terms, _raising_rules(p.n)))


def apply_power(op: LadderOp, k: int, p: CoeffPolynomial) -> CoeffPolynomial:
    """k-fold application of the operator; k = 0 is the identity."""
    if not isinstance(k, int) or k < 0:
        raise ValueError("power must be a nonnegative integer")
    step = lowering if op is LadderOp.LOWERING else raising
    for _ in range(k):
        if not p:
            break
        p = step(p)
    return p


def _require_graded(p: CoeffPolynomial) -> GradedAnalysis:
    a = analyze(p)
    if not a.homogeneous:
        raise ValueError("commutator identities need a homogeneous polynomial")
    if not a.isobaric:
        raise ValueError("commutator identities need an isobaric polynomial")
    return a


def commutator_residual(p: CoeffPolynomial) -> CoeffPolynomial:
    """(lowering raising - raising lowering) P minus (n*g - 2*p) P.

    Zero for every homogeneous isobaric P; anything else signals a broken
    operator implementation.
    """
    a = _require_graded(p)
    lhs = lowering(raising(p)) - raising(lowering(p))
    return lhs - a.defect * p


def power_commutator_residual(op: LadderOp, k: int, p: CoeffPolynomial) -> CoeffPolynomial:
    """Residual of the k-th power commutator identity for the given operator.

    For LOWERING: (lowering^k raising - raising lowering^k) P
                  - k (n*g - 2*p + k - 1) lowering^(k-1) P.
    For RAISING:  (lowering raising^k - raising^k lowering) P
                  - k (n*g - 2*p - k + 1) raising^(k-1) P.
    k = 1 reduces both to the plain commutator residual.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("power must be a positive integer")
    a = _require_graded(p)
    s = a.defect
    if op is LadderOp.LOWERING:
        lhs = apply_power(op, k, raising(p)) - raising(apply_power(op, k, p))
        rhs = k * (s + k - 1) * apply_power(op, k - 1, p)
    else:
        lhs = lowering(apply_power(op, k, p)) - apply_power(op, k, lowering(p))
        rhs = k * (s - k + 1) * apply_power(op, k - 1, p)
    return lhs - rhs
