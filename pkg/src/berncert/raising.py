"""Degree-raising certification and certified minimum enclosures on the box.

A bivariate polynomial of degrees (n1, n2) rewritten at Bernstein degrees
(q1, q2) has normalized coefficients

    c[k][l] = sum_{i,j} a[i][j] * C(k,i) C(l,j) / (C(q1,i) C(q2,j)),

whose minimum never exceeds the minimum of p over the box, and undershoots it
by at most gamma1*(q1-1)/q1**2 + gamma2*(q2-1)/q2**2 with the explicit gamma
sums below.  Doubling the degrees until the minimum coefficient is positive
therefore certifies strict positivity, and the two bounds together give a
certified enclosure of the minimum that converges as the degrees grow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .certificates import Method, PositivityCertificate
from .errors import DegreeError, InconclusiveError, NotPositiveError
from .polys import BPoly, UPoly, binom, rat
from .univariate import BasisConvention


@dataclass(frozen=True)
class BernsteinForm2D:
    """Tensor-product Bernstein coefficients of a bivariate polynomial.

    Normalized convention pairs coeffs[k][l] with
    C(q1,k) x1**k (1-x1)**(q1-k) * C(q2,l) x2**l (1-x2)**(q2-l); the plain
    convention drops the binomial factors, so plain[k][l] equals
    normalized[k][l] * C(q1,k) * C(q2,l).
    """

    q1: int
    q2: int
    coeffs: tuple[tuple[Fraction, ...], ...]
    convention: BasisConvention

    def __post_init__(self):
        if len(self.coeffs) != self.q1 + 1:
            raise ValueError(f"expected {self.q1 + 1} rows, got {len(self.coeffs)}")
        rows = []
        for row in self.coeffs:
            if len(row) != self.q2 + 1:
                raise ValueError(f"expected {self.q2 + 1} columns, got {len(row)}")
            rows.append(tuple(rat(c) for c in row))
        object.__setattr__(self, "coeffs", tuple(rows))

    def to_plain(self) -> "BernsteinForm2D":
        if self.convention is BasisConvention.PLAIN:
            return self
        return BernsteinForm2D(
            self.q1,
            self.q2,
            tuple(
                tuple(
                    c * (binom(self.q1, k) * binom(self.q2, l))
                    for l, c in enumerate(row)
                )
                for k, row in enumerate(self.coeffs)
            ),
            BasisConvention.PLAIN,
        )

    def to_normalized(self) -> "BernsteinForm2D":
        if self.convention is BasisConvention.NORMALIZED:
            return self
        return BernsteinForm2D(
            self.q1,
            self.q2,
            tuple(
                tuple(
                    c / (binom(self.q1, k) * binom(self.q2, l))
                    for l, c in enumerate(row)
                )
                for k, row in enumerate(self.coeffs)
            ),
            BasisConvention.NORMALIZED,
        )


@dataclass(frozen=True)
class MinEnclosure:
    """Certified interval [lo, hi] containing min of p over the unit box.

    lo is the minimum normalized Bernstein coefficient at (q1, q2) and
    hi = lo + bound with bound = gamma1*(q1-1)/q1**2 + gamma2*(q2-1)/q2**2.
    """

    q1: int
    q2: int
    c_min: Fraction
    bound: Fraction

    @property
    def lo(self) -> Fraction:
        return self.c_min

    @property
    def hi(self) -> Fraction:
        return self.c_min + self.bound


@dataclass(frozen=True)
class RaiseReport:
    """Audit data for a degree-raising certificate."""

    doublings: int
    enclosure: MinEnclosure
    gamma1: Fraction
    gamma2: Fraction
    normalized: BernsteinForm2D


def bern_coeffs(p: BPoly, q1: int, q2: int) -> BernsteinForm2D:
    """Normalized Bernstein coefficients of p at degrees (q1, q2).

    Requires q1 >= n1 and q2 >= n2; out-of-range binomials in the numerator
    vanish by convention.
    """
    n1, n2 = p.n1, p.n2
    if q1 < n1 or q2 < n2:
        raise DegreeError(
            f"degrees ({q1}, {q2}) are below polynomial degrees ({n1}, {n2})"
        )
    ratio1 = [
        [Fraction(binom(k, i), binom(q1, i)) for i in range(n1 + 1)]
        for k in range(q1 + 1)
    ]
    ratio2 = [
        [Fraction(binom(l, j), binom(q2, j)) for j in range(n2 + 1)]
        for l in range(q2 + 1)
    ]
    rows = []
    for k in range(q1 + 1):
        rk = ratio1[k]
        # Collapse the x1 direction once per k: t[j] = sum_i a[i][j] * rk[i].
        t = [
            sum((p.coeffs[i][j] * rk[i] for i in range(n1 + 1)), Fraction(0))
            for j in range(n2 + 1)
        ]
        rows.append(
            tuple(
                sum((t[j] * ratio2[l][j] for j in range(n2 + 1)), Fraction(0))
                for l in range(q2 + 1)
            )
        )
    return BernsteinForm2D(q1, q2, tuple(rows), BasisConvention.NORMALIZED)


def min_entry(b: BernsteinForm2D) -> tuple[Fraction, tuple[int, int]]:
    """Smallest coefficient and its first row-major position."""
    best = b.coeffs[0][0]
    pos = (0, 0)
    for k, row in enumerate(b.coeffs):
        for l, c in enumerate(row):
            if c < best:
                best, pos = c, (k, l)
    return best, pos


def min_coeff(b: BernsteinForm2D) -> Fraction:
    """Smallest coefficient of the form."""
    return min_entry(b)[0]


def gamma_bounds(p: BPoly) -> tuple[Fraction, Fraction]:
    """The pair (gamma1, gamma2) with gamma1 = (1/2) sum |a_ij| i(i-1) and
    gamma2 the symmetric sum weighted by j(j-1)."""
    g1 = Fraction(0)
    g2 = Fraction(0)
    for i, row in enumerate(p.coeffs):
        for j, a in enumerate(row):
            if a == 0:
                continue
            mag = abs(a)
            g1 += mag * (i * (i - 1))
            g2 += mag * (j * (j - 1))
    return g1 / 2, g2 / 2


def enclosure_bound(gamma1: Fraction, gamma2: Fraction, q1: int, q2: int) -> Fraction:
    """gamma1*(q1-1)/q1**2 + gamma2*(q2-1)/q2**2, exactly."""
    return gamma1 * Fraction(q1 - 1, q1 * q1) + gamma2 * Fraction(q2 - 1, q2 * q2)


def _degree_floor(n: int) -> int:
    return max(n, 2)


def min_enclosure(p: BPoly, q1: int, q2: int) -> MinEnclosure:
    """Certified enclosure of min p over the box at degrees (q1, q2).

    Requires q1 >= max(n1, 2) and q2 >= max(n2, 2) so the bound term
    (q-1)/q**2 is meaningful in both variables.
    """
    if q1 < _degree_floor(p.n1) or q2 < _degree_floor(p.n2):
        raise DegreeError(
            f"degrees ({q1}, {q2}) are below the floors "
            f"({_degree_floor(p.n1)}, {_degree_floor(p.n2)})"
        )
    c_min = min_coeff(bern_coeffs(p, q1, q2))
    g1, g2 = gamma_bounds(p)
    return MinEnclosure(q1, q2, c_min, enclosure_bound(g1, g2, q1, q2))


def delta(i: int, j: int, k: int, l: int, q1: int, q2: int) -> Fraction:
    """(k/q1)**i * (l/q2)**j - C(k,i) C(l,j) / (C(q1,i) C(q2,j)), exactly.

    This is the normalized Bernstein coefficient of the approximation error
    B_{q1,q2}(x1**i x2**j) - x1**i x2**j at position (k, l); it is nonnegative
    and at most (q1-1)/q1**2 * i(i-1)/2 + (q2-1)/q2**2 * j(j-1)/2.
    """
    if q1 < 1 or q2 < 1:
        raise ValueError("degrees must be at least 1")
    if not (0 <= i <= q1 and 0 <= j <= q2):
        raise ValueError("exponents must satisfy 0 <= i <= q1 and 0 <= j <= q2")
    if not (0 <= k <= q1 and 0 <= l <= q2):
        raise ValueError("grid indices must satisfy 0 <= k <= q1 and 0 <= l <= q2")
    sample = Fraction(k, q1) ** i * Fraction(l, q2) ** j
    ratio = Fraction(binom(k, i) * binom(l, j), binom(q1, i) * binom(q2, j))
    return sample - ratio


def bernstein_approximation(p: BPoly, q1: int, q2: int) -> BPoly:
    """The Bernstein operator approximation of p at degrees (q1, q2).

    Samples p on the grid (k/q1, l/q2) and expands the weighted normalized
    basis sum into monomial form, all exactly.
    """
    if q1 < 1 or q2 < 1:
        raise ValueError("degrees must be at least 1")
    out = [[Fraction(0)] * (q2 + 1) for _ in range(q1 + 1)]
    points1 = [Fraction(k, q1) for k in range(q1 + 1)]
    points2 = [Fraction(l, q2) for l in range(q2 + 1)]
    cols = p.coefficient_cols()
    for k, x1 in enumerate(points1):
        slice_coeffs = UPoly([col.eval(x1) for col in cols])
        bk = binom(q1, k)
        for l, x2 in enumerate(points2):
            value = slice_coeffs.eval(x2) * (bk * binom(q2, l))
            if value == 0:
                continue
            # value * x1**k (1-x1)**(q1-k) * x2**l (1-x2)**(q2-l)
            for r in range(k, q1 + 1):
                c1 = math.comb(q1 - k, r - k)
                term1 = value * c1 if (r - k) % 2 == 0 else -value * c1
                row = out[r]
                for c in range(l, q2 + 1):
                    c2 = math.comb(q2 - l, c - l)
                    row[c] += term1 * c2 if (c - l) % 2 == 0 else -term1 * c2
    return BPoly(out)


def _corner_check(p: BPoly) -> None:
    zero, one = Fraction(0), Fraction(1)
    for x1 in (zero, one):
        for x2 in (zero, one):
            value = p.eval(x1, x2)
            if value <= 0:
                raise NotPositiveError(
                    f"p({x1}, {x2}) = {value} is not strictly positive",
                    witness=(x1, x2),
                    value=value,
                )


def _grid_argmin(p: BPoly, q1: int, q2: int):
    """Grid point (k/q1, l/q2) minimizing p, with the value attained there."""
    best_point = None
    best_value = None
    points1 = [Fraction(k, q1) for k in range(q1 + 1)]
    points2 = [Fraction(l, q2) for l in range(q2 + 1)]
    cols = p.coefficient_cols()
    for x1 in points1:
        slice_coeffs = UPoly([col.eval(x1) for col in cols])
        for x2 in points2:
            value = slice_coeffs.eval(x2)
            if best_value is None or value < best_value:
                best_value, best_point = value, (x1, x2)
    return best_point, best_value


def minimum_lower_bound(
    p: BPoly, max_doublings: int = 20
) -> tuple[Fraction, MinEnclosure]:
    """Certified positive lower bound on min p over the box.

    Doubles the enclosure degrees until the minimum coefficient is positive
    and dominates the error bound (so the returned bound is at least half the
    true minimum).  Raises NotPositiveError when an enclosure proves the
    minimum nonpositive, and InconclusiveError at the doubling cap.
    """
    _corner_check(p)
    q1 = _degree_floor(p.n1)
    q2 = _degree_floor(p.n2)
    g1, g2 = gamma_bounds(p)
    enc = None
    for _ in range(max_doublings + 1):
        c_min = min_coeff(bern_coeffs(p, q1, q2))
        bound = enclosure_bound(g1, g2, q1, q2)
        enc = MinEnclosure(q1, q2, c_min, bound)
        if c_min > 0 and bound <= c_min:
            return c_min, enc
        if enc.hi <= 0:
            witness, value = _grid_argmin(p, q1, q2)
            raise NotPositiveError(
                f"minimum over the box is at most {enc.hi}; "
                f"p{witness} = {value}",
                witness=witness,
                value=value,
            )
        q1 *= 2
        q2 *= 2
    raise InconclusiveError(
        f"no positive lower bound after {max_doublings} degree doublings",
        best=enc,
    )


def certify_raise(
    p: BPoly,
    q_start: Optional[tuple[int, int]] = None,
    max_doublings: int = 20,
) -> PositivityCertificate:
    """Certify p > 0 on the box by raising the Bernstein degrees.

    Starting from q_start (default (max(n1,2), max(n2,2))), doubles both
    degrees until every normalized coefficient is positive, then converts to
    the plain convention.  Raises NotPositiveError with a grid witness when an
    enclosure shows the minimum is nonpositive, and InconclusiveError with the
    best enclosure when the doubling cap is reached.
    """
    _corner_check(p)
    if q_start is None:
        q1, q2 = _degree_floor(p.n1), _degree_floor(p.n2)
    else:
        q1, q2 = q_start
        if q1 < _degree_floor(p.n1) or q2 < _degree_floor(p.n2):
            raise DegreeError(
                f"q_start {q_start} is below the floors "
                f"({_degree_floor(p.n1)}, {_degree_floor(p.n2)})"
            )
    g1, g2 = gamma_bounds(p)
    enc = None
    for doublings in range(max_doublings + 1):
        normalized = bern_coeffs(p, q1, q2)
        c_min, _ = min_entry(normalized)
        bound = enclosure_bound(g1, g2, q1, q2)
        enc = MinEnclosure(q1, q2, c_min, bound)
        if c_min > 0:
            plain = normalized.to_plain()
            report = RaiseReport(doublings, enc, g1, g2, normalized)
            return PositivityCertificate(
                q1, q2, plain.coeffs, Method.RAISE, report
            )
        if enc.hi <= 0:
            witness, value = _grid_argmin(p, q1, q2)
            raise NotPositiveError(
                f"minimum over the box is at most {enc.hi}; p{witness} = {value}",
                witness=witness,
                value=value,
            )
        q1 *= 2
        q2 *= 2
    raise InconclusiveError(
        f"no positive Bernstein form after {max_doublings} degree doublings",
        best=enc,
    )
