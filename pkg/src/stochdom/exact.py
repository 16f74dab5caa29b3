"""Exact polynomials, piecewise polynomials, and sign decision procedures.

Conventions
-----------
* A polynomial is a tuple of rational coefficients, lowest power first,
  trailing zeros trimmed; the zero polynomial is the empty tuple.
* A :class:`Piece` covers the half-open interval ``[lower, upper)`` so
  step functions built on pieces are right-continuous, matching the
  distribution-function convention.  A finite domain maximum belongs to
  the final piece.
* Sign decisions are exact: the square-free part of the polynomial is
  computed, its real roots are isolated with Sturm sequences, and signs
  are sampled at rational points separating the roots.  Roots of even
  multiplicity never falsify nonnegativity; rational zeros that are
  located exactly are reported as touch points.
* Unbounded domains use ``float('inf')`` sentinels for comparison only;
  they never take part in arithmetic.

Everything here is immutable and the functions are pure, so concurrent
use needs no synchronisation.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

from ._scalar import Rat, ZERO, ONE, rat, rat_floor
from .errors import DomainMismatch, NonIntegrable

NEG_INF = float("-inf")
POS_INF = float("inf")

Bound = Union[Rat, float]

# How many Stern-Brocot probes to spend trying to pin an isolated root
# to an exact rational before leaving it as an interval.
_RATIONALIZE_ROUNDS = 48


# ---------------------------------------------------------------------------
# dense polynomials
# ---------------------------------------------------------------------------


def _trim(cs: list) -> tuple:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _peval(cs: Sequence, x) -> Rat:
    acc = ZERO
    for c in reversed(cs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with exact rational coefficients."""

    coeffs: tuple

    @staticmethod
    def make(coeffs: Iterable) -> "Polynomial":
        return Polynomial(_trim([rat(c) for c in coeffs]))

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial(())

    @staticmethod
    def constant(c) -> "Polynomial":
        c = rat(c)
        return Polynomial((c,) if c != 0 else ())

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Rat:
        return _peval(self.coeffs, rat(x))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(_trim(out))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = rat(c)
        if c == 0:
            return Polynomial(())
        return Polynomial(tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(())
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Polynomial(_trim(out))

    def derivative(self) -> "Polynomial":
        cs = self.coeffs
        return Polynomial(tuple(i * cs[i] for i in range(1, len(cs))))

    def antiderivative(self, anchor, value_at_anchor) -> "Polynomial":
        """The antiderivative P with P(anchor) = value_at_anchor, exactly."""
        cs = self.coeffs
        out = [ZERO] + [cs[i] / (i + 1) for i in range(len(cs))]
        anchor = rat(anchor)
        out[0] = rat(value_at_anchor) - _peval(out, anchor)
        return Polynomial(_trim(out))

    def shift(self, a) -> "Polynomial":
        """Taylor shift: returns q with q(t) = p(t + a)."""
        a = rat(a)
        if a == 0 or self.is_zero:
            return self
        out: tuple = ()
        for c in reversed(self.coeffs):
            # out := out * (t + a) + c
            prev = out
            res = [ZERO] * (len(prev) + 1)
            for i, p in enumerate(prev):
                res[i + 1] = res[i + 1] + p
                res[i] = res[i] + a * p
            res[0] = res[0] + c
            out = tuple(res)
        return Polynomial(_trim(list(out)))

    def reflect(self) -> "Polynomial":
        """Returns q with q(t) = p(-t)."""
        return Polynomial(
            tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))
        )


def poly_eval(p: Polynomial, x) -> Rat:
    """Exact Horner evaluation."""
    return p(x)


def poly_combine(a: Polynomial, b: Polynomial, ca, cb) -> Polynomial:
    """ca*a + cb*b in canonical form."""
    return a.scale(ca) + b.scale(cb)


def poly_antiderivative(p: Polynomial, anchor, value_at_anchor) -> Polynomial:
    """The antiderivative of p anchored at a point, exactly."""
    return p.antiderivative(anchor, value_at_anchor)


def monomial_power(root, k: int) -> Polynomial:
    """(x - root)**k expanded with exact binomial coefficients."""
    root = rat(root)
    return Polynomial.make(
        [math.comb(k, i) * (-root) ** (k - i) for i in range(k + 1)]
    )


# ---------------------------------------------------------------------------
# Sturm machinery
# ---------------------------------------------------------------------------


def _divmod_poly(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [rat(c) for c in a]  # inputs may be integer-normalized chains
    qn = len(a) - len(b)
    if qn < 0:
        return (), tuple(rem)
    quo = [ZERO] * (qn + 1)
    lead = rat(b[-1])
    for k in range(qn, -1, -1):
        c = rem[k + len(b) - 1] / lead
        if c != 0:
            quo[k] = c
            for i, bi in enumerate(b):
                rem[k + i] = rem[k + i] - c * bi
    return _trim(quo), _trim(rem)


def _primitive_int(cs: tuple) -> tuple:
    """Scale by a positive rational so coefficients become coprime ints."""
    if not cs:
        return cs
    den = 1
    for c in cs:
        den = den * int(c.denominator) // math.gcd(den, int(c.denominator))
    nums = [int(c.numerator) * (den // int(c.denominator)) for c in cs]
    g = 0
    for n in nums:
        g = math.gcd(g, n)
    if g > 1:
        nums = [n // g for n in nums]
    return tuple(nums)


def _deriv(cs: tuple) -> tuple:
    return tuple(i * cs[i] for i in range(1, len(cs)))


def _gcd_poly(a: tuple, b: tuple) -> tuple:
    while b:
        _, r = _divmod_poly(a, b)
        a, b = b, _primitive_int(r)
    return a


def _square_free(cs: tuple) -> tuple:
    """The square-free part: same roots, all simple."""
    if len(cs) <= 2:
        return _primitive_int(cs)
    g = _gcd_poly(_primitive_int(cs), _primitive_int(_deriv(cs)))
    if len(g) <= 1:
        return _primitive_int(cs)
    q, r = _divmod_poly(cs, g)
    assert not r, "square-free division must be exact"
    return _primitive_int(q)


def _deflate(cs: tuple, root) -> tuple:
    """Exact synthetic division by (x - root); root must be a root."""
    out = [ZERO] * (len(cs) - 1)
    acc = ZERO
    for i in range(len(cs) - 1, 0, -1):
        acc = acc * root + cs[i]
        out[i - 1] = acc
    assert acc * root + cs[0] == 0, "deflation point is not a root"
    return _trim(out)


def _sturm_chain(g: tuple) -> list[tuple]:
    chain = [g, _primitive_int(_deriv(g))]
    while chain[-1]:
        _, r = _divmod_poly(chain[-2], chain[-1])
        if not r:
            break
        chain.append(tuple(-c for c in _primitive_int(r)))
    return [c for c in chain if c]


def _sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def _variations_at(chain: list[tuple], x) -> int:
    signs = []
    for cs in chain:
        s = _sign(_peval(cs, x))
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _simplest_between(x, y) -> Rat:
    """The smallest-denominator rational strictly inside the open (x, y)."""
    n = rat_floor(x) + 1
    if n < y:
        return rat(n)
    f = n - 1
    a, b = x - f, y - f  # 0 <= a < b <= 1
    if a == 0:
        return f + rat(1, rat_floor(1 / b) + 1)
    return f + 1 / _simplest_between(1 / b, 1 / a)


def _count_roots_open(chain: list[tuple], a, b) -> int:
    return _variations_at(chain, a) - _variations_at(chain, b)


def _isolate_roots(g: tuple, lo, hi) -> list:
    """Locate the distinct real roots of square-free g in the open (lo, hi).

    Preconditions: g(lo) != 0 and g(hi) != 0.  Returns a sorted list of
    ('exact', r) and ('interval', a, b) entries; intervals hold exactly
    one simple root, have non-root endpoints of opposite sign, and are
    pairwise disjoint from each other and from the exact roots.
    """
    chain = _sturm_chain(g)
    out: list = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = _count_roots_open(chain, a, b)
        if n == 0:
            continue
        if n == 1:
            out.append(("interval", a, b))
            continue
        m = (a + b) / 2
        if _peval(g, m) == 0:
            h = _deflate(g, m)
            sub = _isolate_roots(h, a, b)
            for loc in sub:
                out.append(_refine_strictly_away(h, loc, m))
            out.append(("exact", m))
        else:
            stack.append((a, m))
            stack.append((m, b))
    out.sort(key=lambda loc: loc[1])
    return out


def _refine_strictly_away(h: tuple, loc, point):
    """Refine an isolating interval of h until it excludes ``point``.

    ``point`` is not a root of h; exact locations pass through untouched.
    May upgrade the interval to an exact root if a probe hits it.
    """
    if loc[0] == "exact":
        return loc
    _, u, v = loc
    if v < point or u > point:
        return loc
    hu = _sign(_peval(h, u))
    if u < point < v:
        hp = _sign(_peval(h, point))
        if hp != hu:
            v = point
        else:
            u, hu = point, hp
    # point is now an endpoint; shrink that endpoint strictly inward.
    if v == point:
        while v == point:
            c = (u + v) / 2
            hc = _sign(_peval(h, c))
            if hc == 0:
                return ("exact", c)
            if hc != hu:
                v = c
            else:
                u = c
    elif u == point:
        hv = _sign(_peval(h, v))
        while u == point:
            c = (u + v) / 2
            hc = _sign(_peval(h, c))
            if hc == 0:
                return ("exact", c)
            if hc != hv:
                u = c
            else:
                v = c
    return ("interval", u, v)


def _rationalize(g: tuple, loc):
    """Try to pin an isolated root to an exact rational via Stern-Brocot
    probes; leaves the (narrowed) interval when the root resists."""
    if loc[0] == "exact":
        return loc
    _, a, b = loc
    sa = _sign(_peval(g, a))
    for _ in range(_RATIONALIZE_ROUNDS):
        r = _simplest_between(a, b)
        v = _peval(g, r)
        if v == 0:
            return ("exact", r)
        if _sign(v) != sa:
            b = r
        else:
            a = r
    return ("interval", a, b)


def _pull_edge_inward(g: tuple, loc, lo, hi):
    """Ensure an isolating interval's endpoints differ from lo and hi."""
    if loc[0] == "exact":
        return loc
    _, a, b = loc
    if a == lo:
        sb = _sign(_peval(g, b))
        while a == lo:
            c = (a + b) / 2
            sc = _sign(_peval(g, c))
            if sc == 0:
                return ("exact", c)
            if sc != sb:
                a = c
            else:
                b = c
    if b == hi:
        sa = _sign(_peval(g, a))
        while b == hi:
            c = (a + b) / 2
            sc = _sign(_peval(g, c))
            if sc == 0:
                return ("exact", c)
            if sc != sa:
                b = c
            else:
                a = c
    return ("interval", a, b)


# ---------------------------------------------------------------------------
# sign reports
# ---------------------------------------------------------------------------


class SignVerdict(Enum):
    NONNEGATIVE_EVERYWHERE = "NonnegativeEverywhere"
    NEGATIVE_SOMEWHERE = "NegativeSomewhere"


@dataclass(frozen=True)
class SignReport:
    """Outcome of an exact nonnegativity decision.

    ``witness`` is a rational point with strictly negative value when the
    verdict is NegativeSomewhere; ``touch_points`` are exactly-located
    rational zeros (roots that are irrational are decided against but not
    listed, since they have no exact representation).
    """

    verdict: SignVerdict
    witness: Optional[Rat]
    witness_value: Optional[Rat]
    touch_points: tuple

    @property
    def nonnegative(self) -> bool:
        return self.verdict is SignVerdict.NONNEGATIVE_EVERYWHERE


def _negative(point, value) -> SignReport:
    return SignReport(SignVerdict.NEGATIVE_SOMEWHERE, point, value, ())


def _nonnegative(touch: Iterable) -> SignReport:
    return SignReport(
        SignVerdict.NONNEGATIVE_EVERYWHERE, None, None, tuple(sorted(set(touch)))
    )


def nonneg_on_interval(p: Polynomial, lo, hi) -> SignReport:
    """Exact decision of p(x) >= 0 for all x in [lo, hi]."""
    lo, hi = rat(lo), rat(hi)
    if not lo < hi:
        raise ValueError("nonneg_on_interval requires lo < hi")
    cs = p.coeffs
    if not cs:
        return _nonnegative(())
    touch = set()
    for pt in (lo, hi, (lo + hi) / 2):
        v = _peval(cs, pt)
        if v < 0:
            return _negative(pt, v)
        if v == 0:
            touch.add(pt)
    deg = len(cs) - 1
    if deg == 0:
        return _nonnegative(())
    if deg == 1:
        root = -cs[0] / cs[1]
        if lo <= root <= hi:
            touch.add(root)
        return _nonnegative(touch)
    if deg == 2:
        vertex = -cs[1] / (2 * cs[2])
        if lo <= vertex <= hi:
            v = _peval(cs, vertex)
            if cs[2] > 0 and v < 0:
                return _negative(vertex, v)
            if v == 0:
                touch.add(vertex)
        return _nonnegative(touch)
    # extra screen for higher degree
    quarter = (hi - lo) / 4
    for pt in (lo + quarter, hi - quarter):
        v = _peval(cs, pt)
        if v < 0:
            return _negative(pt, v)
        if v == 0:
            touch.add(pt)
    shifted = p.shift(lo)
    if all(c >= 0 for c in shifted.coeffs):
        # every coefficient of p(lo + t) nonnegative: p >= 0 for t >= 0,
        # with no zero beyond t = 0
        return _nonnegative(touch)
    return _nonneg_by_isolation(p, lo, hi, touch)


def _nonneg_by_isolation(p: Polynomial, lo, hi, touch: set) -> SignReport:
    cs = p.coeffs
    g = _square_free(cs)
    while _peval(g, lo) == 0:
        g = _deflate(g, lo)
    while _peval(g, hi) == 0:
        g = _deflate(g, hi)
    if len(g) <= 1:
        # all roots sat at the endpoints; interior sign is constant and the
        # midpoint was already screened
        return _nonnegative(touch)
    locs = _isolate_roots(g, lo, hi)
    locs = [_rationalize(g, loc) for loc in locs]
    locs = [_pull_edge_inward(g, loc, lo, hi) for loc in locs]
    samples = {lo, hi}
    prev = lo
    for loc in locs:
        if loc[0] == "exact":
            a = b = loc[1]
            touch.add(a)
        else:
            _, a, b = loc
            samples.add(a)
            samples.add(b)
        if prev < a:
            samples.add((prev + a) / 2)
        prev = b
    if prev < hi:
        samples.add((prev + hi) / 2)
    for s in samples:
        v = _peval(cs, s)
        if v < 0:
            return _negative(s, v)
        if v == 0:
            touch.add(s)
    return _nonnegative(touch)


def _cauchy_root_bound(cs: tuple) -> Rat:
    """All real roots lie in [-B, B]."""
    lead = cs[-1]
    m = max(abs(c / lead) for c in cs[:-1]) if len(cs) > 1 else ZERO
    return ONE + m


def nonneg_on_ray(p: Polynomial, lo) -> SignReport:
    """Exact decision of p(x) >= 0 for all x >= lo."""
    lo = rat(lo)
    cs = p.coeffs
    if not cs:
        return _nonnegative(())
    if len(cs) == 1:
        if cs[0] < 0:
            return _negative(lo, cs[0])
        return _nonnegative(())
    if cs[-1] < 0:
        far = max(lo, _cauchy_root_bound(cs)) + 1
        v = _peval(cs, far)
        assert v < 0
        return _negative(far, v)
    cut = max(lo, _cauchy_root_bound(cs)) + 1
    return nonneg_on_interval(p, lo, cut)


def nonneg_on_left_ray(p: Polynomial, hi) -> SignReport:
    """Exact decision of p(x) >= 0 for all x <= hi."""
    rep = nonneg_on_ray(p.reflect(), -rat(hi))
    return SignReport(
        rep.verdict,
        None if rep.witness is None else -rep.witness,
        rep.witness_value,
        tuple(sorted(-t for t in rep.touch_points)),
    )


# ---------------------------------------------------------------------------
# piecewise polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Piece:
    """One polynomial piece on [lower, upper); bounds may be +/-inf."""

    lower: Bound
    upper: Bound
    poly: Polynomial


@dataclass(frozen=True)
class PiecewisePolynomial:
    """Contiguous sorted pieces over a connected domain.

    ``continuity_class`` is -1 when jumps are allowed, 0 for continuous,
    k for C^k; adjacent pieces of a C^k function agree at shared
    breakpoints up to the k-th derivative, exactly.
    """

    pieces: tuple
    continuity_class: int

    @staticmethod
    def make(
        pieces: Sequence[Piece], continuity_class: int, validate: bool = True
    ) -> "PiecewisePolynomial":
        if not pieces:
            raise ValueError("a piecewise polynomial needs at least one piece")
        for pc in pieces:
            if not pc.lower < pc.upper:
                raise ValueError("piece bounds must satisfy lower < upper")
        for left, right in zip(pieces, pieces[1:]):
            if left.upper != right.lower:
                raise ValueError("pieces must be contiguous")
        if validate and continuity_class >= 0:
            for left, right in zip(pieces, pieces[1:]):
                lp, rp = left.poly, right.poly
                x = rat(left.upper)
                for _ in range(continuity_class + 1):
                    if lp(x) != rp(x):
                        raise ValueError(
                            f"pieces disagree at breakpoint {left.upper} for "
                            f"declared continuity class {continuity_class}"
                        )
                    lp, rp = lp.derivative(), rp.derivative()
        return PiecewisePolynomial(tuple(pieces), continuity_class)

    @property
    def domain(self) -> tuple[Bound, Bound]:
        return (self.pieces[0].lower, self.pieces[-1].upper)

    @property
    def is_zero(self) -> bool:
        return all(pc.poly.is_zero for pc in self.pieces)

    def breakpoints(self) -> list:
        """Interior finite breakpoints, sorted."""
        return [pc.lower for pc in self.pieces[1:]]

    def piece_at(self, x) -> Piece:
        lowers = [pc.lower for pc in self.pieces[1:]]
        idx = bisect_right(lowers, x)
        lo, hi = self.domain
        if x < lo or x > hi:
            raise ValueError(f"{x} is outside the domain [{lo}, {hi}]")
        if idx == len(self.pieces):
            idx -= 1
        return self.pieces[idx]

    def __call__(self, x) -> Rat:
        """Value at x; breakpoints resolve to the right piece (the final
        piece also covers a finite domain maximum)."""
        x = rat(x)
        return self.piece_at(x).poly(x)


def pw_scale(f: PiecewisePolynomial, c) -> PiecewisePolynomial:
    c = rat(c)
    return PiecewisePolynomial(
        tuple(Piece(pc.lower, pc.upper, pc.poly.scale(c)) for pc in f.pieces),
        f.continuity_class,
    )


def pw_neg(f: PiecewisePolynomial) -> PiecewisePolynomial:
    return pw_scale(f, -1)


def _coalesce(pieces: list[Piece]) -> list[Piece]:
    out: list[Piece] = []
    for pc in pieces:
        if out and out[-1].poly.coeffs == pc.poly.coeffs:
            out[-1] = Piece(out[-1].lower, pc.upper, pc.poly)
        else:
            out.append(pc)
    return out


def pw_linear_combine(
    f: PiecewisePolynomial, g: PiecewisePolynomial, cf, cg
) -> PiecewisePolynomial:
    """cf*f + cg*g on the refined breakpoint set.

    Raises DomainMismatch unless the two domains are identical.
    """
    if f.domain != g.domain:
        raise DomainMismatch(f"domains differ: {f.domain} vs {g.domain}")
    cf, cg = rat(cf), rat(cg)
    cuts = sorted(set(f.breakpoints()) | set(g.breakpoints()))
    lo, hi = f.domain
    edges = [lo] + cuts + [hi]
    fi = gi = 0
    pieces = []
    for a, b in zip(edges, edges[1:]):
        while f.pieces[fi].upper <= a:
            fi += 1
        while g.pieces[gi].upper <= a:
            gi += 1
        poly = f.pieces[fi].poly.scale(cf) + g.pieces[gi].poly.scale(cg)
        pieces.append(Piece(a, b, poly))
    pieces = _coalesce(pieces)
    cls = min(f.continuity_class, g.continuity_class)
    return PiecewisePolynomial(tuple(pieces), cls)


def pw_antiderivative(
    f: PiecewisePolynomial, from_left: bool = True
) -> PiecewisePolynomial:
    """Anchored piecewise antiderivative.

    from_left: F(x) = integral of f from the left end of the domain up to
    x, anchored to 0 at that end; F' = f.
    from_left=False: G(x) = integral of f from x to the right end,
    anchored to 0 there; note G' = -f.

    Raises NonIntegrable when an unbounded end carries a nonzero piece
    (the anchored tail integral would diverge).
    """
    pieces = f.pieces
    out: list[Piece] = []
    if from_left:
        running = ZERO
        for i, pc in enumerate(pieces):
            if pc.lower == NEG_INF:
                if not pc.poly.is_zero:
                    raise NonIntegrable(
                        "nonzero integrand on an unbounded left piece"
                    )
                out.append(Piece(pc.lower, pc.upper, Polynomial.zero()))
            else:
                prim = pc.poly.antiderivative(pc.lower, running)
                out.append(Piece(pc.lower, pc.upper, prim))
                if pc.upper != POS_INF:
                    running = prim(pc.upper)
    else:
        running = ZERO
        for pc in reversed(pieces):
            if pc.upper == POS_INF:
                if not pc.poly.is_zero:
                    raise NonIntegrable(
                        "nonzero integrand on an unbounded right piece"
                    )
                out.append(Piece(pc.lower, pc.upper, Polynomial.zero()))
            else:
                prim = (-pc.poly).antiderivative(pc.upper, running)
                out.append(Piece(pc.lower, pc.upper, prim))
                if pc.lower != NEG_INF:
                    running = prim(pc.lower)
        out.reverse()
    return PiecewisePolynomial(tuple(out), f.continuity_class + 1)


def pw_derivative(f: PiecewisePolynomial) -> PiecewisePolynomial:
    return PiecewisePolynomial(
        tuple(Piece(pc.lower, pc.upper, pc.poly.derivative()) for pc in f.pieces),
        max(f.continuity_class - 1, -1),
    )


def pw_integral(f: PiecewisePolynomial) -> Rat:
    """Integral of f over its whole domain, exactly.

    Unbounded pieces must carry the zero polynomial.
    """
    total = ZERO
    for pc in f.pieces:
        if pc.lower == NEG_INF or pc.upper == POS_INF:
            if not pc.poly.is_zero:
                raise NonIntegrable("nonzero integrand on an unbounded piece")
            continue
        prim = pc.poly.antiderivative(pc.lower, ZERO)
        total = total + prim(pc.upper)
    return total


def pw_equal(f: PiecewisePolynomial, g: PiecewisePolynomial) -> bool:
    return f.domain == g.domain and pw_linear_combine(f, g, 1, -1).is_zero


# ---------------------------------------------------------------------------
# piecewise sign analysis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PieceSignDigest:
    """Per-piece sign certificate used in dominance verdicts."""

    lower: Bound
    upper: Bound
    verdict: SignVerdict
    witness: Optional[Rat]
    witness_value: Optional[Rat]
    touch_points: tuple


@dataclass(frozen=True)
class PwSignResult:
    nonnegative: bool
    witness: Optional[Rat]
    witness_value: Optional[Rat]
    touch_points: tuple
    pieces: tuple


def _piece_sign(pc: Piece) -> SignReport:
    poly = pc.poly
    if poly.degree <= 0:
        c = poly.coeffs[0] if poly.coeffs else ZERO
        if c < 0:
            if pc.lower == NEG_INF:
                pt = pc.upper - 1
            elif pc.upper == POS_INF:
                pt = pc.lower + 1
            else:
                pt = (pc.lower + pc.upper) / 2
            return _negative(rat(pt), c)
        return _nonnegative(())
    if pc.lower == NEG_INF:
        return nonneg_on_left_ray(poly, pc.upper)
    if pc.upper == POS_INF:
        return nonneg_on_ray(poly, pc.lower)
    return nonneg_on_interval(poly, pc.lower, pc.upper)


def pw_nonneg(f: PiecewisePolynomial) -> PwSignResult:
    """Decide f >= 0 on the whole domain, with per-piece certificates.

    Bounded pieces are decided on their closure, which is equivalent for
    the continuous curves this engine compares (step curves only ever
    carry constant pieces, decided on the piece itself).
    """
    digests = []
    first_witness = None
    first_value = None
    touch: set = set()
    for pc in f.pieces:
        rep = _piece_sign(pc)
        digests.append(
            PieceSignDigest(
                pc.lower, pc.upper, rep.verdict, rep.witness,
                rep.witness_value, rep.touch_points,
            )
        )
        if rep.nonnegative:
            touch.update(rep.touch_points)
        elif first_witness is None:
            first_witness, first_value = rep.witness, rep.witness_value
    return PwSignResult(
        first_witness is None,
        first_witness,
        first_value,
        tuple(sorted(touch)),
        tuple(digests),
    )


def pw_find_positive(f: PiecewisePolynomial) -> Optional[tuple]:
    """A rational point where f is strictly positive, with its exact
    value, or None when f <= 0 everywhere."""
    res = pw_nonneg(pw_neg(f))
    if res.witness is None:
        return None
    return res.witness, -res.witness_value
