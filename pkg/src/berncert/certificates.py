"""Plain bivariate Bernstein positivity certificates and their verification.

A certificate for p consists of degrees (q1, q2) and a strictly positive
matrix C with

    p(x1, x2) = sum_{i,j} C[i][j] * x1**i (1-x1)**(q1-i) * x2**j (1-x2)**(q2-j).

Verification is a pure function of the certificate and the polynomial: it
re-expands the right-hand side symbolically in the monomial basis and compares
coefficient by coefficient, so it does not trust the producer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .polys import BPoly, rat
from .univariate import BasisConvention, plain_basis_table


class Method(Enum):
    NESTED = "nested"
    RAISE = "raise"


@dataclass(frozen=True)
class PositivityCertificate:
    """Degrees plus a strictly positive plain Bernstein coefficient matrix."""

    q1: int
    q2: int
    coefficients: tuple[tuple[Fraction, ...], ...]
    method: Method
    report: Optional[object] = None
    convention: BasisConvention = BasisConvention.PLAIN

    def __post_init__(self):
        if len(self.coefficients) != self.q1 + 1:
            raise ValueError(
                f"expected {self.q1 + 1} rows, got {len(self.coefficients)}"
            )
        rows = []
        for row in self.coefficients:
            if len(row) != self.q2 + 1:
                raise ValueError(
                    f"expected {self.q2 + 1} columns, got {len(row)}"
                )
            rows.append(tuple(rat(c) for c in row))
        object.__setattr__(self, "coefficients", tuple(rows))


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of a certificate check; falsy when invalid, with reasons."""

    ok: bool
    reasons: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    @property
    def reason(self) -> Optional[str]:
        return "; ".join(self.reasons) if self.reasons else None


def expand_plain_2d(
    coefficients: tuple[tuple[Fraction, ...], ...], q1: int, q2: int
) -> BPoly:
    """Monomial form of sum_{i,j} C[i][j] x1**i (1-x1)**(q1-i) x2**j (1-x2)**(q2-j).

    Denominators are cleared once so the double accumulation runs in integer
    arithmetic; the common denominator is divided back out at the end.  The
    result is exact.
    """
    t1 = plain_basis_table(q1)
    t2 = plain_basis_table(q2)
    den = 1
    for row in coefficients:
        for c in row:
            den = den * c.denominator // math.gcd(den, c.denominator)
    cleared = [
        [c.numerator * (den // c.denominator) for c in row] for row in coefficients
    ]
    # Collapse the x2 direction first: R[i][c] = sum_j C[i][j] * t2[j][c].
    rows = []
    for i in range(q1 + 1):
        crow = cleared[i]
        rows.append(
            [
                sum(crow[j] * t2[j][c] for j in range(c + 1) if t2[j][c])
                for c in range(q2 + 1)
            ]
        )
    out = [[0] * (q2 + 1) for _ in range(q1 + 1)]
    for i in range(q1 + 1):
        ti = t1[i]
        ri = rows[i]
        for r in range(i, q1 + 1):
            t = ti[r]
            if not t:
                continue
            target = out[r]
            for c in range(q2 + 1):
                if ri[c]:
                    target[c] += ri[c] * t
    return BPoly([[Fraction(v, den) for v in row] for row in out])


def verify(p: BPoly, cert: PositivityCertificate) -> VerificationResult:
    """Check strict positivity of all entries and exact expansion equality.

    Both checks always run; the result collects every failure reason found
    (first nonpositive entry in row-major order, first mismatching monomial).
    """
    reasons = []
    entry = next(
        (
            (i, j)
            for i, row in enumerate(cert.coefficients)
            for j, c in enumerate(row)
            if c <= 0
        ),
        None,
    )
    if entry is not None:
        i, j = entry
        reasons.append(
            f"nonpositive entry C[{i}][{j}] = {cert.coefficients[i][j]}"
        )
    expansion = expand_plain_2d(cert.coefficients, cert.q1, cert.q2)
    if expansion != p:
        n1 = max(expansion.n1, p.n1)
        n2 = max(expansion.n2, p.n2)

        def coeff(poly: BPoly, r: int, c: int) -> Fraction:
            if r <= poly.n1 and c <= poly.n2:
                return poly.coeffs[r][c]
            return Fraction(0)

        for r in range(n1 + 1):
            for c in range(n2 + 1):
                got, want = coeff(expansion, r, c), coeff(p, r, c)
                if got != want:
                    reasons.append(
                        f"expansion mismatch at monomial x1^{r} x2^{c}: "
                        f"expansion gives {got}, polynomial has {want}"
                    )
                    break
            else:
                continue
            break
    return VerificationResult(not reasons, tuple(reasons))
