"""Exact construction, evaluation and tensoring of local L-factor polynomials.

A local factor is a polynomial in X = p^(-s) with constant term 1.  It comes
in two modes that never mix inside one value: exact (arbitrary-precision
integer coefficients, the default for every identity that must hold on the
nose) and numeric (complex double coefficients expanded from Satake data).

The tensor construction is root-free: the inverse roots of a factor are the
eigenvalues of the companion matrix of its reversed polynomial, so the
tensor factor is the reversed characteristic polynomial of a Kronecker
product of integer companion matrices.  Coefficients of the degree-8 lifted
factor reach p^(3k-6) scale squared, far past 64 bits, hence everything runs
on Python big integers with exact trace-recurrence divisions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

_LN2 = math.log(2)


class PoleError(ArithmeticError):
    """Evaluation hit a zero of the local polynomial (a pole of 1/f)."""


@dataclass(frozen=True)
class LocalFactor:
    """Polynomial c0 + c1 X + ... + cd X^d with c0 = 1, tagged by prime and
    representation."""

    p: int
    coeffs: tuple
    rep: str
    exact: bool

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if not self.coeffs:
            raise ValueError("coefficient list is empty")
        if self.exact:
            if not all(isinstance(c, int) for c in self.coeffs):
                raise ValueError("exact factors need integer coefficients")
            if self.coeffs[0] != 1:
                raise ValueError("constant coefficient must be 1")
        else:
            object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
            if self.coeffs[0] != 1:
                raise ValueError("constant coefficient must be 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_json_dict(self) -> dict:
        if not self.exact:
            raise ValueError("only exact factors serialize to JSON")
        return {
            "p": self.p,
            "degree": self.degree,
            "rep": self.rep,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "LocalFactor":
        coeffs = tuple(int(c) for c in data["coeffs"])
        if len(coeffs) != int(data["degree"]) + 1:
            raise ValueError("degree field disagrees with coefficient list")
        return cls(p=int(data["p"]), coeffs=coeffs, rep=data["rep"], exact=True)


def poly_mul(a: Sequence, b: Sequence) -> list:
    """Full product of coefficient lists (works over ints and complexes)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_add(a: Sequence, b: Sequence) -> list:
    out = list(a) + [0] * (len(b) - len(a))
    for j, y in enumerate(b):
        out[j] += y
    return out


def poly_from_inverse_roots(
    roots: Sequence[complex], p: int, rep: str
) -> LocalFactor:
    """Numeric factor prod_r (1 - r X) expanded from its inverse roots."""
    coeffs = [1 + 0j]
    for r in roots:
        coeffs = poly_mul(coeffs, [1, -complex(r)])
    return LocalFactor(p=p, coeffs=tuple(coeffs), rep=rep, exact=False)


def spin_character_values(sp) -> list[complex]:
    """The 2^n spin characters mu0 * prod_{i in S} mu_i over subsets S,
    in bitmask order (bit i of the mask selects mu_i)."""
    values = []
    for mask in range(2**sp.degree):
        t = sp.mu0
        for i in range(sp.degree):
            if mask >> i & 1:
                t *= sp.mu[i]
        values.append(t)
    return values


def spin_local_factor(sp) -> LocalFactor:
    """Numeric spin factor prod_{S} (1 - mu0 prod_{i in S} mu_i X), degree 2^n.

    The linear coefficient is minus the Hecke eigenvalue, and the whole
    coefficient vector is invariant under the Weyl action.
    """
    return poly_from_inverse_roots(
        spin_character_values(sp), sp.p, f"spin-{sp.degree}"
    )


def standard_local_factor(sp) -> LocalFactor:
    """Numeric standard factor (1 - X) prod_j (1 - mu_j X)(1 - 1/mu_j X),
    degree 2n + 1, Weyl invariant."""
    roots: list[complex] = [1.0 + 0j]
    for x in sp.mu:
        roots.append(x)
        roots.append(1 / x)
    return poly_from_inverse_roots(roots, sp.p, f"standard-{sp.degree}")


def gl2_factor_exact(k: int, p: int, a_p: int) -> LocalFactor:
    """Exact degree-2 factor 1 - a_p X + p^(k-1) X^2 of an elliptic eigenform."""
    return LocalFactor(p=p, coeffs=(1, -a_p, p ** (k - 1)), rep="spin-1", exact=True)


def gsp4_spin_factor_exact(k: int, p: int, lam_p: int, lam_p2: int) -> LocalFactor:
    """Exact degree-4 spin factor of a degree-2 eigenform from T_p and T_{p^2}
    eigenvalues, in the classical integer-coefficient form."""
    coeffs = (
        1,
        -lam_p,
        lam_p * lam_p - lam_p2 - p ** (2 * k - 4),
        -lam_p * p ** (2 * k - 3),
        p ** (4 * k - 6),
    )
    return LocalFactor(p=p, coeffs=coeffs, rep="spin-2", exact=True)


def companion_matrix(coeffs: Sequence[int]) -> list[list[int]]:
    """Integer companion matrix whose eigenvalues are the factor's inverse
    roots (the matrix of the reversed, monic polynomial)."""
    d = len(coeffs) - 1
    if d < 1:
        raise ValueError("factor must have positive degree")
    m = [[0] * d for _ in range(d)]
    for i in range(1, d):
        m[i][i - 1] = 1
    for i in range(d):
        m[i][d - 1] = -coeffs[d - i]
    return m


def kronecker_product(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    na, nb = len(a), len(b)
    out = [[0] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(na):
            if a[i][j] == 0:
                continue
            for k in range(nb):
                for l in range(nb):
                    out[i * nb + k][j * nb + l] = a[i][j] * b[k][l]
    return out


def charpoly(matrix: list[list[int]]) -> list[int]:
    """Monic characteristic polynomial [1, c1, ..., cn] of an integer matrix.

    Uses the trace recurrence; every division is exact over the integers and
    is asserted to be so, keeping the computation fraction-free in effect.
    """
    n = len(matrix)
    a = matrix
    b = [row[:] for row in a]
    out = [1, -sum(b[i][i] for i in range(n))]
    for k in range(2, n + 1):
        for i in range(n):
            b[i][i] += out[-1]
        b = [
            [sum(a[i][m] * b[m][j] for m in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(b[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("characteristic polynomial step left a remainder")
        out.append(-(tr // k))
    return out


def tensor_local_factor(a: LocalFactor, b: LocalFactor) -> LocalFactor:
    """Exact tensor factor det(1 - (C_a (x) C_b) X) of degree deg(a)*deg(b).

    C_a and C_b are the companion matrices of the reversed polynomials, so
    the inverse roots of the result are all pairwise products of inverse
    roots of the inputs, computed without any root extraction.
    """
    if a.p != b.p:
        raise ValueError("tensor factors must share a prime")
    if not (a.exact and b.exact):
        raise ValueError("tensor construction requires exact factors")
    m = kronecker_product(companion_matrix(a.coeffs), companion_matrix(b.coeffs))
    return LocalFactor(p=a.p, coeffs=tuple(charpoly(m)), rep="tensor", exact=True)


def _is_real_integer(s: complex) -> bool:
    s = complex(s)
    return s.imag == 0 and float(s.real).is_integer()


def _exact_value_at_integer(coeffs: Sequence[int], p: int, m: int) -> Fraction:
    z = Fraction(1, p**m) if m >= 0 else Fraction(p**-m)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _big_term(c: int, j: int, p: int, s: complex) -> complex:
    # c * p^(-j*s) without capping |c| at float range: split off a power of 2.
    shift = max(0, c.bit_length() - 53)
    mant = c >> shift if c >= 0 else -((-c) >> shift)
    return mant * cmath.exp(shift * _LN2 - j * s * math.log(p))


def evaluate(f: LocalFactor, s: complex) -> complex:
    """Reciprocal local L-value 1 / f(p^(-s)).

    Exact factors at real integer s are evaluated in exact rational
    arithmetic before the final rounding; otherwise terms are summed with a
    mantissa/exponent split so huge integer coefficients never overflow.
    Raises PoleError when f(p^(-s)) vanishes.
    """
    s = complex(s)
    if f.exact and _is_real_integer(s):
        val = _exact_value_at_integer(f.coeffs, f.p, int(s.real))
        if val == 0:
            raise PoleError(f"local factor at p={f.p} vanishes at s={int(s.real)}")
        return complex(1 / float(val))
    if f.exact:
        acc = 0j
        for j, c in enumerate(f.coeffs):
            if c:
                acc += _big_term(c, j, f.p, s)
    else:
        z = complex(f.p) ** (-s)
        acc = 0j
        for c in reversed(f.coeffs):
            acc = acc * z + c
    if acc == 0:
        raise PoleError(f"local factor at p={f.p} vanishes at s={s}")
    return 1 / acc
