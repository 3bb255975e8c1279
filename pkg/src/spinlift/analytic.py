"""Archimedean factors, critical strips, and truncated Euler products.

The completion of a spinor L-function is bookkept as a multiset of shifts d
with one doubled Gamma factor 2 (2 pi)^(-s) Gamma(s + d) per shift, plus a
symbolic scalar prefactor and the center of the functional equation
s -> center - s.  Critical integers are read off Gamma-pole finiteness at m
and at center - m.  No analytic continuation is performed anywhere; the
truncated Euler product comes with a rigorous tail bound instead, valid in
the half-plane where the product converges absolutely.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
import scipy.special

from .localfactors import LocalFactor, PoleError, evaluate
from .primes import primes_up_to

TWO_PI = 2 * math.pi

#: Default margin above the convergence abscissa.
DEFAULT_DELTA = 1e-6

#: Tolerance for the per-prime inverse-root modulus check.
ROOT_TOL = 1e-9


class AbscissaError(ValueError):
    """The requested point lies outside the region of guaranteed convergence."""


def gamma_c(s: complex) -> complex:
    """Doubled complex Gamma factor 2 (2 pi)^(-s) Gamma(s).

    Poles exactly at the nonpositive integers; accuracy is that of the
    underlying double-precision Gamma (well under 1e-12 relative).
    """
    s = complex(s)
    if s.imag == 0 and s.real <= 0 and float(s.real).is_integer():
        raise PoleError(f"Gamma factor has a pole at s={int(s.real)}")
    g = complex(scipy.special.gamma(s))
    return 2.0 * cmath.exp(-s * math.log(TWO_PI)) * g


@dataclass(frozen=True)
class GammaProfile:
    """Multiset of Gamma shifts, a symbolic prefactor r * (2 pi)^e, and the
    center of the functional equation s -> center - s."""

    shifts: tuple[int, ...]
    center: int
    prefactor_rational: Fraction = Fraction(1)
    prefactor_two_pi_exponent: int = 0

    def __post_init__(self) -> None:
        if not self.shifts:
            raise ValueError("a profile needs at least one shift")
        object.__setattr__(self, "shifts", tuple(sorted(int(d) for d in self.shifts)))
        object.__setattr__(
            self, "prefactor_rational", Fraction(self.prefactor_rational)
        )
        if self.prefactor_rational <= 0:
            raise ValueError("prefactor must be positive")

    def finite_at(self, m: int) -> bool:
        """No Gamma pole at integer m: every shifted argument is >= 1."""
        return all(m + d >= 1 for d in self.shifts)

    def value_at(self, s: complex) -> complex:
        val = complex(
            float(self.prefactor_rational) * TWO_PI**self.prefactor_two_pi_exponent
        )
        for d in self.shifts:
            val *= gamma_c(s + d)
        return val

    def to_dict(self) -> dict:
        return {
            "shifts": list(self.shifts),
            "center": self.center,
            "prefactor_rational": str(self.prefactor_rational),
            "prefactor_two_pi_exponent": self.prefactor_two_pi_exponent,
        }


def linf_spin3(k: int) -> GammaProfile:
    """Completion profile of the degree-3 spinor L-function at weight k:
    shifts {0, 1-k, 2-k, 3-k}, functional equation center 3k - 5."""
    if k % 2 or k < 12:
        raise ValueError("weight must be even and at least 12")
    return GammaProfile(shifts=(0, 1 - k, 2 - k, 3 - k), center=3 * k - 5)


def linf_rankin_selberg(k1: int, k2: int) -> GammaProfile:
    """Completion profile of the convolution of weight-k1 and weight-k2
    (degree 1 and 2) data: shifts {0, 1-k2, 2-k2, 1-k1}, prefactor
    2^-3 (2 pi)^(4-2k2-k1), center k1 + 2k2 - 3."""
    if k1 % 2 or k2 % 2 or k1 <= 0 or k1 > k2:
        raise ValueError("need even weights with 0 < k1 <= k2")
    return GammaProfile(
        shifts=(0, 1 - k2, 2 - k2, 1 - k1),
        center=k1 + 2 * k2 - 3,
        prefactor_rational=Fraction(1, 8),
        prefactor_two_pi_exponent=4 - 2 * k2 - k1,
    )


def critical_values(k: int) -> list[int]:
    """Integers m with no Gamma pole at m nor at center - m: exactly k..2k-5.

    Computed from pole finiteness over a wide window and asserted against
    the closed form; a mismatch would be an internal defect and raises.
    """
    prof = linf_spin3(k)
    window = range(-4 * k, 4 * k + 1)
    vals = [
        m for m in window if prof.finite_at(m) and prof.finite_at(prof.center - m)
    ]
    expected = list(range(k, 2 * k - 4))
    if vals != expected:
        raise RuntimeError(
            f"critical-value bookkeeping mismatch at k={k}: {vals} vs {expected}"
        )
    return vals


def deligne_normalize(m: int, k: int, l_value: float, omega: float) -> float:
    """L(m) / (pi^(4m - 3k + 6) * Omega) with Omega a declared positive period."""
    if omega <= 0:
        raise ValueError("the period must be positive")
    if m not in critical_values(k):
        raise ValueError(f"m={m} is not critical for weight {k}")
    return l_value / (math.pi ** (4 * m - 3 * k + 6) * omega)


def convergence_abscissa(n: int, k: int, ramanujan: bool = True) -> float:
    """Abscissa of guaranteed absolute convergence.

    With ``ramanujan`` set, the sharp spinor bounds (k+1)/2, k-1 and
    3k/2 - 2 for degrees 1, 2, 3; without it, the unconditional bound n + 1
    for the standard-embedding Euler product.
    """
    if n not in (1, 2, 3):
        raise ValueError("degree must be 1, 2 or 3")
    if not ramanujan:
        return float(n + 1)
    return {1: (k + 1) / 2, 2: float(k - 1), 3: 1.5 * k - 2}[n]


@dataclass(frozen=True)
class EulerProductResult:
    """Truncated product value with a rigorous bound on the dropped tail.

    ``tail_bound`` dominates |log of the remaining product| under the
    assumption that inverse-root moduli stay below p^root_exponent for all
    primes beyond the bound, where root_exponent is the larger of weight/2
    and the exponents actually observed.  Primes whose observed exponent
    exceeds weight/2 are listed in ``violations``.
    """

    value: complex
    prime_bound: int
    tail_bound: float
    abscissa: float
    root_exponent: float
    violations: tuple[tuple[int, float], ...]

    def __post_init__(self) -> None:
        if self.tail_bound < 0:
            raise ValueError("tail bound must be nonnegative")

    def to_dict(self) -> dict:
        return {
            "value": [self.value.real, self.value.imag],
            "prime_bound": self.prime_bound,
            "tail_bound": self.tail_bound,
            "abscissa": self.abscissa,
            "root_exponent": self.root_exponent,
            "violations": [[p, e] for p, e in self.violations],
        }


def _inverse_root_exponents(factor: LocalFactor, weight: int) -> list[float]:
    """Base-p log moduli of the factor's inverse roots.

    The polynomial is rescaled by p^(weight/2) before the numeric root find
    so coefficients of either huge-integer or tiny magnitude become O(1);
    big integers enter only through math.log and never overflow a double.
    """
    half = weight / 2
    lnp = math.log(factor.p)
    scaled: list[complex] = []
    for j, c in enumerate(factor.coeffs):
        if c == 0:
            scaled.append(0.0)
        elif isinstance(c, int):
            sign = 1.0 if c > 0 else -1.0
            scaled.append(sign * math.exp(math.log(abs(c)) - j * half * lnp))
        else:
            scaled.append(c * math.exp(-j * half * lnp))
    roots = np.roots(scaled[::-1])
    return [half - math.log(abs(y)) / lnp for y in roots]


def truncated_euler_product(
    factor_for_prime: Callable[[int], LocalFactor],
    s: complex,
    prime_bound: int,
    weight: int,
    delta: float = DEFAULT_DELTA,
    root_tol: float = ROOT_TOL,
) -> EulerProductResult:
    """Product of 1/f_p(p^(-s)) over p <= prime_bound with a tail bound.

    Requires Re(s) > weight/2 + 1 + delta up front and, after inspecting the
    supplied factors, Re(s) > e + 1 + delta for the largest observed
    inverse-root exponent e.  The tail bound sums |z|/(1-|z|) over the
    dropped primes with |z| <= p^(e - Re(s)) per inverse root, comparing the
    prime sum against an integral.  Per-prime evaluation order is ascending,
    so results are deterministic.
    """
    if prime_bound < 2:
        raise ValueError("prime bound must be at least 2")
    if delta <= 0:
        raise ValueError("delta must be positive")
    s = complex(s)
    sigma = s.real
    base = weight / 2 + 1 + delta
    if sigma <= base:
        raise AbscissaError(
            f"Re(s)={sigma} is not above the convergence abscissa {base}"
        )
    primes = primes_up_to(prime_bound)
    factors: list[LocalFactor] = []
    exponent = weight / 2
    violations: list[tuple[int, float]] = []
    max_degree = 0
    for p in primes:
        f = factor_for_prime(p)
        if f.p != p:
            raise ValueError(f"factor provider returned prime {f.p} for {p}")
        observed = max(_inverse_root_exponents(f, weight))
        if observed > weight / 2 + root_tol:
            violations.append((p, observed))
        exponent = max(exponent, observed)
        max_degree = max(max_degree, f.degree)
        factors.append(f)
    effective = exponent + 1 + delta
    if sigma <= effective:
        raise AbscissaError(
            f"Re(s)={sigma} is not above the observed abscissa {effective} "
            f"(root exponent {exponent}); violations: {violations}"
        )
    value = complex(1)
    for f in factors:
        value *= evaluate(f, s)
    t = sigma - exponent
    z_bound = prime_bound ** (-t)
    tail = max_degree * prime_bound ** (1 - t) / ((t - 1) * (1 - z_bound))
    return EulerProductResult(
        value=value,
        prime_bound=prime_bound,
        tail_bound=tail,
        abscissa=effective,
        root_exponent=exponent,
        violations=tuple(violations),
    )
