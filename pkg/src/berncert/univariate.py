"""Univariate Bernstein machinery on the unit interval.

Provides conversion between the monomial basis and the Bernstein basis
x**i * (1-x)**(m-i) (plain convention, no binomial factor) or
C(m,i) * x**i * (1-x)**(m-i) (normalized convention), the Goursat transform
p~(x) = (2x)**n * p((1-x)/x), degree elevation, an explicit degree bound at
which a strictly positive polynomial acquires a nonnegative Bernstein
representation, certified range enclosure by de Casteljau bisection, and a
positivity certifier that combines all of the above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

from .errors import DegreeError, InconclusiveError, NotPositiveError
from .polys import RationalLike, UPoly, binom, rat


class BasisConvention(Enum):
    PLAIN = "plain"
    NORMALIZED = "normalized"


@dataclass(frozen=True)
class BernsteinForm1D:
    """Bernstein coefficients of a univariate polynomial at a fixed degree.

    Plain convention:       p(x) = sum_i coeffs[i] * x**i * (1-x)**(degree-i)
    Normalized convention:  p(x) = sum_i coeffs[i] * C(degree,i) * x**i * (1-x)**(degree-i)
    """

    degree: int
    coeffs: tuple[Fraction, ...]
    convention: BasisConvention

    def __post_init__(self):
        if self.degree < 0:
            raise DegreeError(f"negative Bernstein degree {self.degree}")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(
                f"expected {self.degree + 1} coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(rat(c) for c in self.coeffs))

    def to_plain(self) -> "BernsteinForm1D":
        if self.convention is BasisConvention.PLAIN:
            return self
        m = self.degree
        return BernsteinForm1D(
            m,
            tuple(c * binom(m, i) for i, c in enumerate(self.coeffs)),
            BasisConvention.PLAIN,
        )

    def to_normalized(self) -> "BernsteinForm1D":
        if self.convention is BasisConvention.NORMALIZED:
            return self
        m = self.degree
        return BernsteinForm1D(
            m,
            tuple(c / binom(m, i) for i, c in enumerate(self.coeffs)),
            BasisConvention.NORMALIZED,
        )


@dataclass(frozen=True)
class RangeEnclosure1D:
    """Certified range enclosure of a polynomial over [0, 1].

    ``lo <= min p`` and ``max p <= hi``.  ``min_value``/``max_value`` are
    exact polynomial values attained at the sample points ``min_point`` /
    ``max_point``, so the true minimum lies in [lo, min_value] and the true
    maximum in [max_value, hi].  ``subdivisions`` counts bisection levels.
    """

    lo: Fraction
    hi: Fraction
    subdivisions: int
    min_value: Fraction
    min_point: Fraction
    max_value: Fraction
    max_point: Fraction


def to_bernstein_plain(p: UPoly, m: int) -> BernsteinForm1D:
    """Plain Bernstein coefficients of p at degree m >= degree(p).

    Coefficient i is sum over j <= min(n, i) of C(m-j, m-i) * a_j, the unique
    representation of p in the basis x**i * (1-x)**(m-i).
    """
    n = p.degree
    if m < n:
        raise DegreeError(f"target degree {m} is below polynomial degree {n}")
    a = p.coeffs
    out = []
    for i in range(m + 1):
        s = Fraction(0)
        for j in range(min(n, i) + 1):
            s += binom(m - j, m - i) * a[j]
        out.append(s)
    return BernsteinForm1D(m, tuple(out), BasisConvention.PLAIN)


def plain_basis_table(m: int) -> list[list[int]]:
    """Monomial expansions of the plain basis at degree m.

    Entry [i][r] is the coefficient of x**r in x**i * (1-x)**(m-i), namely
    (-1)**(r-i) * C(m-i, r-i) for r >= i and zero otherwise.  Each row uses
    the binomial recurrence instead of independent C(m-i, k) evaluations.
    """
    table = []
    for i in range(m + 1):
        row = [0] * (m + 1)
        n = m - i
        c = 1
        for k in range(n + 1):
            row[i + k] = c if k % 2 == 0 else -c
            c = c * (n - k) // (k + 1)
        table.append(row)
    return table


def from_bernstein(b: BernsteinForm1D) -> UPoly:
    """Exact monomial form of a Bernstein representation (either convention).

    Denominators are cleared once so the accumulation runs on integers.
    """
    plain = b.to_plain()
    m = plain.degree
    den = 1
    for c in plain.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    cleared = [c.numerator * (den // c.denominator) for c in plain.coeffs]
    out = [0] * (m + 1)
    for i, ai in enumerate(cleared):
        if ai == 0:
            continue
        n = m - i
        c = 1
        for k in range(n + 1):
            if k % 2 == 0:
                out[i + k] += ai * c
            else:
                out[i + k] -= ai * c
            c = c * (n - k) // (k + 1)
    return UPoly([Fraction(v, den) for v in out])


def goursat_coefficients(p: UPoly, n: Optional[int] = None) -> tuple[Fraction, ...]:
    """Coefficients (B_0, ..., B_n) of the Goursat transform of p.

    B_k collects, over pairs (i, j) with i - j = n - k and 0 <= j <= i <= n,
    the terms 2**n * (-1)**j * C(i, j) * a_i.  ``n`` defaults to the stored
    degree; a larger n treats p as padded with zero coefficients up to x**n,
    which scales and shifts the transform accordingly.
    """
    if n is None:
        n = p.degree
    elif n < p.degree:
        raise DegreeError(f"declared degree {n} is below polynomial degree {p.degree}")
    a = list(p.coeffs) + [Fraction(0)] * (n - p.degree)
    two_n = 2**n
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(n - k, n + 1):
            j = i - (n - k)
            term = two_n * math.comb(i, j) * a[i]
            s += term if j % 2 == 0 else -term
        out.append(s)
    return tuple(out)


def goursat(p: UPoly) -> UPoly:
    """The Goursat transform p~(x) = (2x)**n * p((1-x)/x) as a polynomial."""
    return UPoly(goursat_coefficients(p))


def powers_reznick_degree(
    n: int, max_abs_e: RationalLike, lambda_lower: RationalLike
) -> int:
    """Degree q = 3n + ceil(2 n**2 max_abs_e / lambda_lower) + 1.

    At this degree a polynomial of degree n that is at least lambda_lower on
    [0, 1], whose Goursat transform has coefficients bounded by max_abs_e in
    absolute value, has nonnegative plain Bernstein coefficients.  The ceiling
    is taken exactly on rationals.
    """
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    max_abs_e = rat(max_abs_e)
    lam = rat(lambda_lower)
    if max_abs_e < 0:
        raise ValueError("max_abs_e must be nonnegative")
    if lam <= 0:
        raise ValueError("lambda_lower must be positive to certify positivity")
    return 3 * n + math.ceil(Fraction(2 * n * n) * max_abs_e / lam) + 1


def elevate(b: BernsteinForm1D, q_star: int) -> BernsteinForm1D:
    """Rewrite a plain Bernstein form at the higher degree q_star.

    New coefficient k is the sum over l in [max(0, k+q-q_star), min(q, k)] of
    C(q_star-q, k-l) * A_l; the represented polynomial is unchanged.
    """
    plain = b.to_plain()
    q = plain.degree
    if q_star < q:
        raise DegreeError(f"cannot elevate degree {q} form to lower degree {q_star}")
    d = q_star - q
    out = []
    for k in range(q_star + 1):
        s = Fraction(0)
        for l in range(max(0, k - d), min(q, k) + 1):
            s += binom(d, k - l) * plain.coeffs[l]
        out.append(s)
    return BernsteinForm1D(q_star, tuple(out), BasisConvention.PLAIN)


def _decasteljau_halves(control: tuple[Fraction, ...]):
    """Split normalized Bernstein control points at the midpoint."""
    left = [control[0]]
    right = [control[-1]]
    layer = list(control)
    while len(layer) > 1:
        layer = [(a + b) / 2 for a, b in zip(layer, layer[1:])]
        left.append(layer[0])
        right.append(layer[-1])
    right.reverse()
    return tuple(left), tuple(right)


def normalized_coefficients(p: UPoly) -> tuple[Fraction, ...]:
    """Normalized Bernstein coefficients of p at its own degree."""
    return to_bernstein_plain(p, p.degree).to_normalized().coeffs


def range_enclosure_1d(
    p: UPoly,
    max_width: Optional[RationalLike] = None,
    *,
    predicate: Optional[Callable[[RangeEnclosure1D], bool]] = None,
    max_levels: int = 64,
) -> RangeEnclosure1D:
    """Certified enclosure of the range of p over [0, 1].

    The normalized Bernstein coefficients of p on a subinterval bound its
    values there, and the first and last coefficients are the exact endpoint
    values; bisecting by exact de Casteljau subdivision tightens the bounds.
    Refinement stops when ``predicate`` holds, or, given ``max_width``, when
    both gaps min_value - lo and hi - max_value are at most max_width (the
    outer bounds then match attained values to within max_width).  If the
    enclosure becomes exact (lo and hi both attained) it is returned as is.
    Raises InconclusiveError when max_levels bisection levels do not suffice,
    with the best enclosure attached.
    """
    if predicate is None:
        if max_width is None:
            raise ValueError("provide either max_width or a stopping predicate")
        width = rat(max_width)
        if width <= 0:
            raise ValueError("max_width must be positive")

        def predicate(enc: RangeEnclosure1D) -> bool:
            return enc.min_value - enc.lo <= width and enc.hi - enc.max_value <= width

    control = normalized_coefficients(p)
    zero, one = Fraction(0), Fraction(1)
    segments = [(zero, one, control)]
    samples = [(zero, control[0]), (one, control[-1])]
    min_point, min_value = min(samples, key=lambda s: s[1])
    max_point, max_value = max(samples, key=lambda s: s[1])
    levels = 0
    while True:
        lo = min(min(cps) for _, _, cps in segments)
        hi = max(max(cps) for _, _, cps in segments)
        enc = RangeEnclosure1D(
            lo, hi, levels, min_value, min_point, max_value, max_point
        )
        if predicate(enc):
            return enc
        active, passive = [], []
        for seg in segments:
            if min(seg[2]) < min_value or max(seg[2]) > max_value:
                active.append(seg)
            else:
                passive.append(seg)
        if not active:
            return enc
        if levels >= max_levels:
            raise InconclusiveError(
                f"range enclosure not tight enough after {max_levels} bisection levels",
                best=enc,
            )
        refined = []
        for a, b, cps in active:
            mid = (a + b) / 2
            left, right = _decasteljau_halves(cps)
            refined.append((a, mid, left))
            refined.append((mid, b, right))
            mid_value = left[-1]
            if mid_value < min_value:
                min_value, min_point = mid_value, mid
            if mid_value > max_value:
                max_value, max_point = mid_value, mid
        segments = passive + refined
        levels += 1


@dataclass(frozen=True)
class UnivariateCertificate:
    """Strict-positivity certificate for a univariate polynomial on [0, 1].

    ``form`` is a plain Bernstein representation of degree ``q_star = 2 * q``
    whose coefficients are all strictly positive; ``q`` is the degree bound
    computed from ``max_abs_e`` (largest Goursat coefficient magnitude) and
    the certified lower bound ``lambda_lower`` on min p over [0, 1].
    """

    q_star: int
    form: BernsteinForm1D
    q: int
    lambda_lower: Fraction
    max_abs_e: Fraction


def certify_positive_1d(p: UPoly, max_levels: int = 64) -> UnivariateCertificate:
    """Certify p > 0 on [0, 1] by a strictly positive plain Bernstein form.

    Pipeline: certify a positive lower bound on min p by range enclosure with
    bisection refinement, bound the Goursat coefficients exactly, compute the
    degree bound q, and convert p at q_star = 2q, where all coefficients are
    strictly positive.  Raises NotPositiveError with a witness point when a
    sample value <= 0 turns up (the endpoints are checked first since the
    extreme plain coefficients equal p(0) and p(1)), and InconclusiveError
    when the enclosure still straddles zero at the bisection cap.
    """
    for endpoint in (Fraction(0), Fraction(1)):
        value = p.eval(endpoint)
        if value <= 0:
            raise NotPositiveError(
                f"p({endpoint}) = {value} is not strictly positive",
                witness=endpoint,
                value=value,
            )
    enc = range_enclosure_1d(
        p,
        predicate=lambda e: e.lo > 0 or e.min_value <= 0,
        max_levels=max_levels,
    )
    if enc.min_value <= 0:
        raise NotPositiveError(
            f"p({enc.min_point}) = {enc.min_value} is not strictly positive",
            witness=enc.min_point,
            value=enc.min_value,
        )
    lam = enc.lo
    e = goursat_coefficients(p)
    max_abs_e = max(abs(c) for c in e)
    q = powers_reznick_degree(p.degree, max_abs_e, lam)
    q_star = 2 * q
    form = to_bernstein_plain(p, q_star)
    bad = [i for i, c in enumerate(form.coeffs) if c <= 0]
    if bad:
        raise AssertionError(
            f"certified lower bound produced a nonpositive coefficient at {bad[0]}"
        )
    return UnivariateCertificate(q_star, form, q, lam, max_abs_e)
