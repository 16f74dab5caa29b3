"""Exact decision of n-SD, n-ISD, and strong n-ISD with certificates.

Direction convention: verdicts are reported from the first argument's
perspective, so LeftDominated means the first distribution is dominated
by the second in the tested order.

* n-SD: X is dominated by Y iff the order-n integrated CDF of X lies
  above that of Y everywhere on the real line.
* n-ISD: X is dominated by Y iff the order-n integrated quantile of X
  lies below that of Y on (0, 1).
* strong n-ISD: n-ISD together with exact equality of the expected
  minimum order statistics mu_{1:j} for j = 1..n-1.

Strictness means the difference curve is nonzero somewhere, which for
these curve families is equivalent to strict inequality at some point;
Equivalent (difference identically zero) happens only for identical
distributions.  Witnesses carry an exact point and the exact gap there.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ._scalar import Rat, rat
from .distributions import DiscreteDistribution, min_orderstat_mean
from .exact import (
    PiecewisePolynomial,
    PieceSignDigest,
    pw_find_positive,
    pw_linear_combine,
    pw_neg,
    pw_nonneg,
)
from .transforms import integrated_cdf, integrated_quantile


class Relation(Enum):
    LEFT_DOMINATED = "LeftDominated"
    RIGHT_DOMINATED = "RightDominated"
    EQUIVALENT = "Equivalent"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class Witness:
    """An exact point together with the strictly positive gap there."""

    point: Rat
    gap: Rat


@dataclass(frozen=True)
class OrderStatCheck:
    """Equality record for one mu_{1:j} comparison (strong n-ISD)."""

    index: int
    left: Rat
    right: Rat
    equal: bool


@dataclass(frozen=True)
class Verdict:
    relation: Relation
    strict: bool
    witness_left: Optional[Witness]
    witness_right: Optional[Witness]
    certificate: tuple
    mode: str
    order: int


def _interiorize(curve: PiecewisePolynomial, point, lo, hi):
    """Nudge a witness at a closed endpoint into the open interval,
    preserving the sign of the curve there (possible by continuity)."""
    point = rat(point)
    if lo < point < hi:
        return point
    target = curve(point)
    probe = (point + (rat(hi) + rat(lo)) / 2) / 2
    while True:
        v = curve(probe)
        if (v > 0) == (target > 0) and (v < 0) == (target < 0):
            return probe
        probe = (probe + point) / 2


def _witness_positive(diff: PiecewisePolynomial, open_unit: bool) -> Witness:
    found = pw_find_positive(diff)
    assert found is not None, "strictness witness must exist for a nonzero curve"
    point, value = found
    if open_unit:
        point = _interiorize(diff, point, 0, 1)
        value = diff(point)
    return Witness(point, value)


def _decide(diff: PiecewisePolynomial, mode: str, order: int, open_unit: bool) -> Verdict:
    """Shared comparison core: LeftDominated iff diff >= 0 everywhere."""
    if diff.is_zero:
        return Verdict(Relation.EQUIVALENT, False, None, None, (), mode, order)
    res_pos = pw_nonneg(diff)
    if res_pos.nonnegative:
        return Verdict(
            Relation.LEFT_DOMINATED,
            True,
            _witness_positive(diff, open_unit),
            None,
            res_pos.pieces,
            mode,
            order,
        )
    neg_point, neg_value = res_pos.witness, res_pos.witness_value
    if open_unit:
        neg_point = _interiorize(diff, neg_point, 0, 1)
        neg_value = diff(neg_point)
    witness_right = Witness(neg_point, -neg_value)
    res_neg = pw_nonneg(pw_neg(diff))
    if res_neg.nonnegative:
        return Verdict(
            Relation.RIGHT_DOMINATED,
            True,
            None,
            witness_right,
            res_pos.pieces,
            mode,
            order,
        )
    return Verdict(
        Relation.INCOMPARABLE,
        False,
        _witness_positive(diff, open_unit),
        witness_right,
        res_pos.pieces,
        mode,
        order,
    )


def sd_compare(x: DiscreteDistribution, y: DiscreteDistribution, n: int) -> Verdict:
    """Decide n-SD between x and y.

    LeftDominated iff the difference of the order-n integrated CDFs,
    first minus second, is nonnegative on every piece of the real line;
    witness_left locates a strictly positive gap (strictness evidence),
    witness_right a strictly negative one (refutation of LeftDominated).
    """
    fx = integrated_cdf(x, n).curve
    fy = integrated_cdf(y, n).curve
    diff = pw_linear_combine(fx, fy, 1, -1)
    return _decide(diff, "sd", n, open_unit=False)


def isd_compare(x: DiscreteDistribution, y: DiscreteDistribution, n: int) -> Verdict:
    """Decide n-ISD between x and y.

    The quantified inequality lives on the open unit interval; for n >= 2
    both curves are continuous and vanish at 0, so deciding on the closed
    interval is equivalent, and for n = 1 the piecewise-constant
    comparison on piece interiors is equivalent by left-continuity.
    Witnesses are always interior points.
    """
    qx = integrated_quantile(x, n).curve
    qy = integrated_quantile(y, n).curve
    diff = pw_linear_combine(qy, qx, 1, -1)
    return _decide(diff, "isd", n, open_unit=True)


def strong_isd_compare(
    x: DiscreteDistribution, y: DiscreteDistribution, n: int
) -> Verdict:
    """Decide strong n-ISD: n-ISD plus exact mu_{1:j} equality, j < n.

    When the base relation holds but an equality fails, the verdict is
    Incomparable and the failed OrderStatCheck entries in the certificate
    identify which index broke (they substitute for a pointwise witness,
    which need not exist on the failing side).
    """
    if n < 2:
        from .errors import OrderOutOfRange

        raise OrderOutOfRange("strong n-ISD needs order >= 2")
    base = isd_compare(x, y, n)
    checks = []
    for j in range(1, n):
        mx, my = min_orderstat_mean(x, j), min_orderstat_mean(y, j)
        checks.append(OrderStatCheck(j, mx, my, mx == my))
    certificate = tuple(checks) + base.certificate
    all_equal = all(c.equal for c in checks)
    if base.relation is Relation.EQUIVALENT:
        return Verdict(
            Relation.EQUIVALENT, False, None, None, certificate, "strong-isd", n
        )
    if base.relation is Relation.LEFT_DOMINATED and all_equal:
        return Verdict(
            Relation.LEFT_DOMINATED,
            base.strict,
            base.witness_left,
            None,
            certificate,
            "strong-isd",
            n,
        )
    if base.relation is Relation.RIGHT_DOMINATED and all_equal:
        return Verdict(
            Relation.RIGHT_DOMINATED,
            base.strict,
            None,
            base.witness_right,
            certificate,
            "strong-isd",
            n,
        )
    return Verdict(
        Relation.INCOMPARABLE,
        False,
        base.witness_left,
        base.witness_right,
        certificate,
        "strong-isd",
        n,
    )
