"""Triangular fuzzy numbers, alpha-cut intervals and exact interval arithmetic."""

from __future__ import annotations

from dataclasses import dataclass


class DivisionDomainError(ValueError):
    """Raised when a divisor interval or fuzzy number contains zero."""


@dataclass(frozen=True)
class Interval:
    """Closed real interval [lo, hi]."""

    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"interval requires lo <= hi, got [{self.lo}, {self.hi}]")

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= x <= self.hi + tol

    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """Triangular fuzzy number (a, b, c) with piecewise-linear membership peaking at b."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not (self.a <= self.b <= self.c):
            raise ValueError(f"TFN requires a <= b <= c, got ({self.a}, {self.b}, {self.c})")

    def membership(self, x: float) -> float:
        if x < self.a or x > self.c:
            return 0.0
        if self.a <= x <= self.b:
            if self.b == self.a:
                return 1.0
            return (x - self.a) / (self.b - self.a)
        if self.c == self.b:
            return 1.0
        return (self.c - x) / (self.c - self.b)

    @property
    def is_crisp(self) -> bool:
        return self.a == self.c


TFN = TriangularFuzzyNumber


def alpha_cut(t: TriangularFuzzyNumber, alpha: float) -> Interval:
    """Alpha-cut [a + alpha*(b-a), c - alpha*(c-b)].

    alpha = 0 returns the closed support [a, c]; alpha = 1 returns [b, b].
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    # convex-combination form is exact at both ends and keeps lo <= hi
    return Interval((1.0 - alpha) * t.a + alpha * t.b,
                    (1.0 - alpha) * t.c + alpha * t.b)


def gmir(t: TriangularFuzzyNumber) -> float:
    """Graded mean integration representation (a + 4b + c) / 6."""
    return (t.a + 4.0 * t.b + t.c) / 6.0


def interval_divide(num: Interval, den: Interval) -> Interval:
    """Exact interval quotient num / den for a divisor bounded away from zero."""
    if den.lo <= 0.0:
        raise DivisionDomainError(f"divisor interval must be strictly positive, got {den}")
    quotients = (num.lo / den.lo, num.lo / den.hi, num.hi / den.lo, num.hi / den.hi)
    return Interval(min(quotients), max(quotients))


def _quotient_cut(num: TriangularFuzzyNumber, den: TriangularFuzzyNumber,
                  alpha: float) -> Interval:
    n = alpha_cut(num, alpha)
    d = alpha_cut(den, alpha)
    if d.lo > 0.0:
        return interval_divide(n, d)
    # negative divisor: flip signs of both sides
    flipped = interval_divide(Interval(-n.hi, -n.lo), Interval(-d.hi, -d.lo))
    return flipped


def _check_divisor_support(den: TriangularFuzzyNumber) -> None:
    if not (den.a > 0.0 or den.c < 0.0):
        raise DivisionDomainError(
            f"divisor support [{den.a}, {den.c}] must exclude zero")


def exact_quotient_membership(num: TriangularFuzzyNumber, den: TriangularFuzzyNumber,
                              x: float) -> float:
    """Membership of x in the exact quotient num / den.

    Equals the largest alpha whose quotient cut contains x. Each cut endpoint is a
    ratio of linear functions of alpha, so the boundary equations x * den_end(alpha)
    = num_end(alpha) are linear in alpha and solved in closed form.
    """
    _check_divisor_support(den)
    tol = 1e-9

    support = _quotient_cut(num, den, 0.0)
    if not support.contains(x, tol):
        return 0.0
    if _quotient_cut(num, den, 1.0).contains(x, tol):
        return 1.0

    # endpoint pairs as linear functions of alpha: value(alpha) = v0 + alpha*dv
    num_ends = ((num.a, num.b - num.a), (num.c, num.b - num.c))
    den_ends = ((den.a, den.b - den.a), (den.c, den.b - den.c))
    candidates = [0.0]
    for n0, dn in num_ends:
        for d0, dd in den_ends:
            # x*(d0 + alpha*dd) = n0 + alpha*dn
            denom = dn - x * dd
            if abs(denom) < 1e-15:
                continue
            candidates.append((x * d0 - n0) / denom)

    best = 0.0
    for a in candidates:
        if 0.0 <= a <= 1.0 and a > best and _quotient_cut(num, den, a).contains(x, tol):
            best = a
    return best


def approximate_quotient(num: TriangularFuzzyNumber,
                         den: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    """Endpoint-ratio TFN approximation of the quotient.

    Support endpoints come from exact interval division of the supports and
    the modal value is b1/b2; for positive operands this is the classical
    (a1/c2, b1/b2, c1/a2) rule.
    """
    if den.a <= 0.0:
        raise DivisionDomainError(
            f"approximate quotient requires a strictly positive divisor, got {den}")
    support = interval_divide(Interval(num.a, num.c), Interval(den.a, den.c))
    return TriangularFuzzyNumber(support.lo, num.b / den.b, support.hi)
