"""Eigenform fixtures generated from scratch out of integer q-expansions.

The series engine is exact: coefficients are integers over one common
denominator and all arithmetic truncates at the series order.  From it the
package manufactures its own test data: level-one Eisenstein series, the
discriminant cusp form, the weight-26 newform spanning S_26, and the
degree-2 weight-14 eigendata realized through the lift whose spinor factor
splits off two zeta-type lines.
"""

from __future__ import annotations

import cmath
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .primes import primes_up_to
from .satake import EigenvalueEntry, EigenvalueRecord, SatakeParams

DEFAULT_ORDER = 64
DEFAULT_PRIME_BOUND = 19

FIXTURE_LABELS = ("Delta.12.1", "SK.14.2", "g26.26.1")


@dataclass(frozen=True)
class QSeries:
    """Truncated q-expansion with exact rational coefficients.

    Stored as integer numerators over one positive common denominator, kept
    reduced.  Index n is the coefficient of q^n; the order is the truncation
    degree and binary operations truncate to the smaller order.
    """

    coeffs: tuple[int, ...]
    denom: int = 1

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")
        if self.denom <= 0:
            raise ValueError("denominator must be positive")

    @classmethod
    def _make(cls, coeffs: list[int], denom: int) -> "QSeries":
        if denom < 0:
            coeffs = [-c for c in coeffs]
            denom = -denom
        g = denom
        for c in coeffs:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            coeffs = [c // g for c in coeffs]
            denom //= g
        return cls(tuple(coeffs), denom)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def integral(self) -> bool:
        return self.denom == 1

    def coefficient(self, n: int) -> Fraction:
        return Fraction(self.coeffs[n], self.denom)

    def integer_coefficient(self, n: int) -> int:
        c = self.coefficient(n)
        if c.denominator != 1:
            raise ValueError(f"coefficient of q^{n} is not an integer: {c}")
        return c.numerator

    def __neg__(self) -> "QSeries":
        return QSeries(tuple(-c for c in self.coeffs), self.denom)

    def __add__(self, other: "QSeries") -> "QSeries":
        order = min(self.order, other.order)
        d = math.lcm(self.denom, other.denom)
        a, b = d // self.denom, d // other.denom
        return self._make(
            [self.coeffs[n] * a + other.coeffs[n] * b for n in range(order + 1)], d
        )

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return self._make(out, self.denom * other.denom)

    __rmul__ = __mul__

    def scale(self, c) -> "QSeries":
        c = Fraction(c)
        return self._make(
            [x * c.numerator for x in self.coeffs], self.denom * c.denominator
        )


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m (B_1 = -1/2 convention), by the defining recurrence."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    if m == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(m):
        acc += math.comb(m + 1, j) * bernoulli(j)
    return -acc / (m + 1)


def _sigma_table(e: int, order: int) -> list[int]:
    """sigma_e(n) for n = 0..order, by a divisor sieve (entry 0 unused)."""
    table = [0] * (order + 1)
    for d in range(1, order + 1):
        de = d**e
        for n in range(d, order + 1, d):
            table[n] += de
    return table


def eisenstein(k: int, order: int = DEFAULT_ORDER) -> QSeries:
    """Weight-k level-one Eisenstein series 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.

    The rational prefactor is kept exact; the constant term is always 1.
    """
    if k < 4 or k % 2:
        raise ValueError("weight must be even and at least 4")
    if order < 1:
        raise ValueError("order must be positive")
    factor = Fraction(-2 * k) / bernoulli(k)
    sig = _sigma_table(k - 1, order)
    den = factor.denominator
    coeffs = [den] + [factor.numerator * sig[n] for n in range(1, order + 1)]
    return QSeries._make(coeffs, den)


def delta(order: int = DEFAULT_ORDER) -> QSeries:
    """The discriminant cusp form q * prod_{n>=1} (1 - q^n)^24, c(1) = 1.

    The 24th power is assembled from eight copies of the cube of the Euler
    product, whose sparse expansion sum_m (-1)^m (2m+1) q^(m(m+1)/2) keeps
    the whole computation at O(order^1.5) integer operations.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    cube = []
    m = 0
    while m * (m + 1) // 2 <= order - 1:
        cube.append((m * (m + 1) // 2, (-1) ** m * (2 * m + 1)))
        m += 1
    acc = [0] * order
    acc[0] = 1
    for _ in range(8):
        nxt = [0] * order
        for i, a in enumerate(acc):
            if a == 0:
                continue
            for j, c in cube:
                if i + j >= order:
                    break
                nxt[i + j] += a * c
        acc = nxt
    return QSeries(tuple([0] + acc), 1)


def newform_weight26(order: int = DEFAULT_ORDER) -> QSeries:
    """The normalized eigenform spanning the one-dimensional space S_26.

    Obtained as delta * E_14; the product already has c(1) = 1 and the
    one-dimensionality of the space makes it an eigenform automatically.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    f = delta(order) * eisenstein(14, order)
    if f.coefficient(1) != 1:
        raise AssertionError("weight-26 eigenform failed its normalization")
    return f


def sk_eigenvalue(k: int, p: int, a_p: int) -> int:
    """Degree-2 Hecke eigenvalue a_p + p^(k-1) + p^(k-2) of the lift of a
    weight-(2k-2) elliptic eigenform with eigenvalue a_p."""
    return a_p + p ** (k - 1) + p ** (k - 2)


def sk_eigenvalue_psquared(k: int, p: int, a_p: int) -> int:
    """Degree-2 eigenvalue for T_{p^2}, forced by the split spinor factor.

    The degree-4 spin polynomial of the lift factors as
    (1 - p^(k-1) X)(1 - p^(k-2) X)(1 - a_p X + p^(2k-3) X^2); matching its
    quadratic coefficient against the generic degree-2 spin polynomial
    determines lambda_{p^2} uniquely.
    """
    lam = sk_eigenvalue(k, p, a_p)
    quad = 2 * p ** (2 * k - 3) + a_p * (p ** (k - 1) + p ** (k - 2))
    return lam * lam - p ** (2 * k - 4) - quad


def sk_component_eigenvalue(k: int, p: int, lam_p: int, lam_p2: int) -> int | None:
    """Recover the elliptic eigenvalue a_p behind degree-2 lift eigendata.

    Divides the degree-4 spin polynomial by the two zeta-type linear factors
    (1 - p^(k-1) X)(1 - p^(k-2) X); returns a_p when the division is exact
    with the lift-shaped quadratic quotient, else None.
    """
    f = [
        1,
        -lam_p,
        lam_p * lam_p - lam_p2 - p ** (2 * k - 4),
        -lam_p * p ** (2 * k - 3),
        p ** (4 * k - 6),
    ]
    g = [1, -(p ** (k - 1) + p ** (k - 2)), p ** (2 * k - 3)]
    q = [0, 0, 0]
    q[0] = f[0]
    q[1] = f[1] - g[1] * q[0]
    q[2] = f[2] - g[1] * q[1] - g[2] * q[0]
    product = [0] * 5
    for i, a in enumerate(g):
        for j, b in enumerate(q):
            product[i + j] += a * b
    if product != f or q[2] != p ** (2 * k - 3):
        return None
    return -q[1]


def saito_kurokawa_satake(k: int, p: int, a_p: int) -> SatakeParams:
    """Degree-2 Satake parameters of the lift of a weight-(2k-2) eigenform.

    The orbit representative fixes beta0 = p^(k-1); beta0*beta1 and
    beta0*beta2 are the roots of X^2 - a_p X + p^(2k-3), so the four spin
    characters are p^(k-1), p^(k-2) and those two roots, reproducing the
    classical eigenvalue a_p + p^(k-1) + p^(k-2).
    """
    if k % 2:
        raise ValueError("weight must be even")
    b0 = complex(p ** (k - 1))
    disc = complex(a_p * a_p - 4 * p ** (2 * k - 3))
    sq = cmath.sqrt(disc)
    r1 = (a_p + sq) / 2
    r2 = (a_p - sq) / 2
    return SatakeParams(degree=2, weight=k, p=p, mu0=b0, mu=(r1 / b0, r2 / b0))


def fixture_records(
    prime_bound: int = DEFAULT_PRIME_BOUND, order: int = DEFAULT_ORDER
) -> tuple[EigenvalueRecord, ...]:
    """Eigenvalue records for the three stock eigenforms, from first principles.

    a_p values are read off freshly generated q-expansions; T_{p^2} data uses
    the exact eigenform identities lambda_{p^2} = a_p^2 - p^(k-1) in degree 1
    and the lift formula in degree 2.
    """
    if prime_bound < 2:
        raise ValueError("prime bound must be at least 2")
    order = max(order, prime_bound + 1)
    dl = delta(order)
    g26 = newform_weight26(order)
    ps = primes_up_to(prime_bound)

    def gl2_entries(series: QSeries, k: int) -> tuple[EigenvalueEntry, ...]:
        out = []
        for p in ps:
            a = series.integer_coefficient(p)
            out.append(EigenvalueEntry(p=p, lam=a, lam2=a * a - p ** (k - 1)))
        return tuple(out)

    sk_entries = tuple(
        EigenvalueEntry(
            p=p,
            lam=sk_eigenvalue(14, p, g26.integer_coefficient(p)),
            lam2=sk_eigenvalue_psquared(14, p, g26.integer_coefficient(p)),
        )
        for p in ps
    )
    return (
        EigenvalueRecord("Delta.12.1", 1, 12, gl2_entries(dl, 12)),
        EigenvalueRecord("SK.14.2", 2, 14, sk_entries),
        EigenvalueRecord("g26.26.1", 1, 26, gl2_entries(g26, 26)),
    )


def fixtures_payload(
    prime_bound: int = DEFAULT_PRIME_BOUND, order: int = DEFAULT_ORDER
) -> dict:
    records = sorted(fixture_records(prime_bound, order), key=lambda r: r.label)
    return {
        "schema_version": 1,
        "prime_bound": prime_bound,
        "order": max(order, prime_bound + 1),
        "records": [r.to_json_dict() for r in records],
    }


def write_fixtures(
    path: str | os.PathLike,
    prime_bound: int = DEFAULT_PRIME_BOUND,
    order: int = DEFAULT_ORDER,
) -> None:
    """Write fixtures deterministically; regeneration is byte-identical."""
    text = json.dumps(fixtures_payload(prime_bound, order), sort_keys=True, indent=2)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")


def load_fixtures(path: str | os.PathLike) -> dict[str, EigenvalueRecord]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("schema_version") != 1:
        raise ValueError("unsupported fixtures schema version")
    records = [EigenvalueRecord.from_json_dict(item) for item in data["records"]]
    return {r.label: r for r in records}
