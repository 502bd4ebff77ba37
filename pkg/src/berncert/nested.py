"""Nested bivariate certification: the univariate pipeline applied twice.

For each fixed x2, p(., x2) is a univariate polynomial whose plain Bernstein
coefficients at a sufficiently high shared degree q1 are strictly positive,
and those coefficients A_i(x2) are themselves polynomials in x2.  Certifying
each of them at a shared degree q2 yields the strictly positive matrix C with

    p(x1, x2) = sum_{i,j} C[i][j] x1**i (1-x1)**(q1-i) x2**j (1-x2)**(q2-j).

q1 is driven by a certified positive lower bound on min p over the box and a
certified upper bound on the Goursat coefficient polynomials of the rows; q2
by the same quantities computed exactly for each coefficient polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .certificates import Method, PositivityCertificate
from .errors import CertificationError, DegreeError, InconclusiveError
from .polys import BPoly, RationalLike, UPoly, binom, rat
from .raising import minimum_lower_bound
from .univariate import (
    goursat_coefficients,
    powers_reznick_degree,
    range_enclosure_1d,
    to_bernstein_plain,
)


@dataclass(frozen=True)
class NestedDegreeReport:
    """Certified quantities behind the degrees of a nested certificate.

    lambda_lower is a positive lower bound on min p over the box; l_upper
    dominates sup over x2 of the largest row Goursat coefficient magnitude.
    The per-row vectors are filled by the second stage: positive lower bounds
    on each coefficient polynomial over [0, 1] and the exact maxima of their
    Goursat coefficient magnitudes.
    """

    q1: int
    lambda_lower: Fraction
    l_upper: Fraction
    q2: Optional[int] = None
    per_i_inf_lower: Optional[tuple[Fraction, ...]] = None
    per_i_maxb_upper: Optional[tuple[Fraction, ...]] = None


def coefficient_bernstein_polys(p: BPoly, q1: int) -> tuple[UPoly, ...]:
    """The coefficient polynomials A_i(x2) of p at Bernstein degree q1 in x1.

    Row i (0 <= i <= q1) is sum over j <= min(n1, i) of
    C(q1-j, q1-i) * a_j(x2), so that p(x1, x2) equals
    sum_i A_i(x2) * x1**i * (1-x1)**(q1-i) identically.
    """
    n1 = p.n1
    if q1 < n1:
        raise DegreeError(f"degree {q1} is below the x1 degree {n1}")
    rows = p.coefficient_rows()
    out = []
    for i in range(q1 + 1):
        acc = UPoly([0])
        for j in range(min(n1, i) + 1):
            acc = acc + binom(q1 - j, q1 - i) * rows[j]
        out.append(acc)
    return tuple(out)


def _goursat_of_rows(rows: tuple[UPoly, ...]) -> tuple[UPoly, ...]:
    """Goursat coefficient polynomials B_k(a(x2)) of the row vector.

    Same linear combination as the scalar Goursat coefficients, applied to
    polynomials in x2 (n is the row count minus one).
    """
    n = len(rows) - 1
    two_n = 2**n
    out = []
    for k in range(n + 1):
        acc = UPoly([0])
        for i in range(n - k, n + 1):
            j = i - (n - k)
            factor = two_n * math.comb(i, j)
            if j % 2 == 1:
                factor = -factor
            acc = acc + factor * rows[i]
        out.append(acc)
    return tuple(out)


def nested_q1(
    p: BPoly,
    *,
    lambda_lower: Optional[RationalLike] = None,
    l_upper: Optional[RationalLike] = None,
    max_doublings: int = 20,
    max_levels: int = 64,
) -> tuple[int, NestedDegreeReport]:
    """Shared x1 Bernstein degree at which every slice p(., x2) is positive.

    Returns the even degree 2 * (3 n1 + ceil(2 n1**2 L / lam) + 1) where lam
    is a certified positive lower bound on min p over the box and L a
    certified upper bound on sup over x2 in [0, 1] of max_i |B_i(a(x2))|.
    Caller-supplied ``lambda_lower`` and ``l_upper`` are trusted bounds that
    replace the computed ones (any valid positive lower bound or upper bound
    keeps the degree sufficient).
    """
    if lambda_lower is None:
        lam, _ = minimum_lower_bound(p, max_doublings)
    else:
        lam = rat(lambda_lower)
        if lam <= 0:
            raise ValueError("lambda_lower must be positive")
    if l_upper is None:
        bound = Fraction(0)
        for bpoly in _goursat_of_rows(p.coefficient_rows()):
            enc = range_enclosure_1d(bpoly, max_width=lam, max_levels=max_levels)
            bound = max(bound, abs(enc.lo), abs(enc.hi))
    else:
        bound = rat(l_upper)
    q1 = 2 * powers_reznick_degree(p.n1, bound, lam)
    return q1, NestedDegreeReport(q1=q1, lambda_lower=lam, l_upper=bound)


def nested_q2(
    p: BPoly,
    q1: int,
    report: NestedDegreeReport,
    max_levels: int = 64,
) -> tuple[int, NestedDegreeReport]:
    """Shared x2 degree certifying every coefficient polynomial positive.

    For each row i, the Goursat coefficient magnitudes of A_i(x2), taken as a
    degree-n2 vector, are computed exactly, and a positive lower bound on
    inf A_i over [0, 1] is certified by range enclosure (refined until the
    bound is within a factor two of an attained value).  The degree is
    2 * (3 n2 + max_i ceil(2 n2**2 maxB_i / inf_i) + 1).
    """
    apolys = coefficient_bernstein_polys(p, q1)
    n2 = p.n2
    two_n2_sq = Fraction(2 * n2 * n2)
    infs = []
    maxbs = []
    worst = 0
    for i, apoly in enumerate(apolys):
        e = goursat_coefficients(apoly, n=n2)
        maxb = max(abs(c) for c in e)
        try:
            enc = range_enclosure_1d(
                apoly,
                predicate=lambda enc_: enc_.min_value <= 0
                or (enc_.lo > 0 and enc_.min_value <= 2 * enc_.lo),
                max_levels=max_levels,
            )
        except InconclusiveError as exc:
            raise InconclusiveError(
                f"coefficient polynomial {i} could not be certified positive "
                f"within {max_levels} bisection levels",
                best=exc.best,
            ) from exc
        if enc.min_value <= 0 or enc.lo <= 0:
            raise InconclusiveError(
                f"coefficient polynomial {i} is not certifiably positive "
                f"(value {enc.min_value} at {enc.min_point})",
                best=enc,
            )
        infs.append(enc.lo)
        maxbs.append(maxb)
        worst = max(worst, math.ceil(two_n2_sq * maxb / enc.lo))
    q2 = 2 * (3 * n2 + worst + 1)
    full = replace(
        report,
        q2=q2,
        per_i_inf_lower=tuple(infs),
        per_i_maxb_upper=tuple(maxbs),
    )
    return q2, full


def certify_nested(
    p: BPoly,
    *,
    lambda_lower: Optional[RationalLike] = None,
    l_upper: Optional[RationalLike] = None,
    max_doublings: int = 20,
    max_levels: int = 64,
) -> PositivityCertificate:
    """Certify p > 0 on the unit box by the nested univariate construction.

    Runs the two degree computations, then converts every coefficient
    polynomial to its plain Bernstein form at the shared degree q2; all
    entries of the resulting matrix are strictly positive and the expansion
    reproduces p exactly.
    """
    q1, report = nested_q1(
        p,
        lambda_lower=lambda_lower,
        l_upper=l_upper,
        max_doublings=max_doublings,
        max_levels=max_levels,
    )
    q2, report = nested_q2(p, q1, report, max_levels=max_levels)
    rows = []
    for i, apoly in enumerate(coefficient_bernstein_polys(p, q1)):
        form = to_bernstein_plain(apoly, q2)
        bad = next((j for j, c in enumerate(form.coeffs) if c <= 0), None)
        if bad is not None:
            raise CertificationError(
                f"row {i} produced a nonpositive coefficient at {bad}; "
                "a supplied bound was not a valid certified bound"
            )
        rows.append(form.coeffs)
    return PositivityCertificate(q1, q2, tuple(rows), Method.NESTED, report)
