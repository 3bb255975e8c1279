"""Satake parameter algebra for symplectic similitude groups.

A spherical local representation of GSp(2n, Q_p) is classified, up to the
Weyl group, by a point (mu0; mu1, ..., mun) on the dual maximal torus with
all entries nonzero.  For a holomorphic Hecke eigenform of weight k and
degree n the similitude character pins down the normalization

    mu0^2 * mu1 * ... * mun = p^(n*k - n*(n+1)/2),

and the eigenvalue of the classical Hecke operator at p is the trace of the
spin representation,

    lambda_p = mu0 * prod_{i=1..n} (1 + mu_i),

where the product expands over the 2^n spin characters indexed by strictly
increasing index tuples.  Degrees 1, 2 and 3 are supported.  All values are
immutable and every function is pure, so everything is safe to use from
concurrent code.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import permutations

#: Global relative tolerance for modulus comparisons of double-precision data.
REL_TOL = 1e-9

SUPPORTED_DEGREES = (1, 2, 3)


@dataclass(frozen=True)
class SatakeParams:
    """Satake parameters (mu0; mu1..mun) of a degree-n eigenform at a prime.

    The entries are complex double precision; identities that must be exact
    are routed through integer local-factor polynomials instead (see
    :mod:`spinlift.localfactors`).
    """

    degree: int
    weight: int
    p: int
    mu0: complex
    mu: tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.degree not in SUPPORTED_DEGREES:
            raise ValueError(f"degree must be one of {SUPPORTED_DEGREES}, got {self.degree}")
        if self.weight < 1:
            raise ValueError("weight must be positive")
        if self.p < 2:
            raise ValueError("p must be at least 2")
        object.__setattr__(self, "mu0", complex(self.mu0))
        object.__setattr__(self, "mu", tuple(complex(x) for x in self.mu))
        if len(self.mu) != self.degree:
            raise ValueError(f"expected {self.degree} torus entries, got {len(self.mu)}")
        if self.mu0 == 0 or any(x == 0 for x in self.mu):
            raise ValueError("Satake parameters must be nonzero")

    def normalization_target(self) -> int:
        """Exact value p^(n*k - n*(n+1)/2) that mu0^2 * prod(mu) must equal."""
        n = self.degree
        return self.p ** (n * self.weight - n * (n + 1) // 2)

    def similitude_product(self) -> complex:
        prod = self.mu0 * self.mu0
        for x in self.mu:
            prod *= x
        return prod


def check_normalization(sp: SatakeParams, tol: float = REL_TOL) -> bool:
    """Whether mu0^2 * prod(mu) matches the weight normalization within tol.

    The comparison is |product - target| <= tol * target with target the
    exact integer power of p.
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    target = sp.normalization_target()
    return abs(sp.similitude_product() - target) <= tol * target


def hecke_eigenvalue(sp: SatakeParams) -> complex:
    """Spin-representation trace mu0 * prod(1 + mu_i).

    Invariant under the Weyl group action, and equal to the classical Hecke
    eigenvalue at p under the standard normalization.
    """
    val = sp.mu0
    for x in sp.mu:
        val *= 1 + x
    return val


def ramanujan_check(sp: SatakeParams, tol: float = REL_TOL) -> bool:
    """True iff every |mu_i| (i >= 1) lies within tol of 1."""
    return all(abs(abs(x) - 1.0) <= tol for x in sp.mu)


def satake_from_gl2(k: int, p: int, a_p: int | float) -> SatakeParams:
    """Degree-1 parameters of an elliptic eigenform from its eigenvalue a_p.

    alpha0 and alpha0*alpha1 are the two roots of X^2 - a_p X + p^(k-1), so
    the normalization alpha0^2 * alpha1 = p^(k-1) and the eigenvalue identity
    hecke_eigenvalue = a_p hold by construction.  Complex roots are allowed.
    """
    disc = complex(a_p * a_p - 4 * p ** (k - 1))
    sq = cmath.sqrt(disc)
    r1 = (a_p + sq) / 2
    r2 = (a_p - sq) / 2
    return SatakeParams(degree=1, weight=k, p=p, mu0=r1, mu=(r2 / r1,))


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation acting on (mu0; mu1..mun).

    Indices in ``flips`` are inverted first (each flip sends mu_i to 1/mu_i
    and multiplies mu0 by the original mu_i, which preserves the similitude
    normalization); afterwards slot i of the result receives the entry at
    ``perm[i]``.  These elements form a group of order 2^n * n!.
    """

    perm: tuple[int, ...]
    flips: frozenset[int]

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        if any(i < 0 or i >= n for i in self.flips):
            raise ValueError("flip indices out of range")

    @property
    def degree(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Composition: (self * other) acts as other first, then self."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        perm = tuple(other.perm[j] for j in self.perm)
        flips = other.flips.symmetric_difference(other.perm[j] for j in self.flips)
        return WeylElement(perm, frozenset(flips))


def weyl_identity(n: int) -> WeylElement:
    return WeylElement(tuple(range(n)), frozenset())


def weyl_group(n: int) -> list[WeylElement]:
    """All 2^n * n! signed permutations in a fixed deterministic order."""
    if n not in SUPPORTED_DEGREES:
        raise ValueError(f"degree must be one of {SUPPORTED_DEGREES}")
    out = []
    for perm in permutations(range(n)):
        for mask in range(2**n):
            flips = frozenset(i for i in range(n) if mask >> i & 1)
            out.append(WeylElement(perm, flips))
    return out


def weyl_apply(w: WeylElement, sp: SatakeParams) -> SatakeParams:
    """Image of sp under w; preserves the similitude normalization."""
    if w.degree != sp.degree:
        raise ValueError("Weyl element degree does not match parameters")
    mu0 = sp.mu0
    mus = list(sp.mu)
    for j in sorted(w.flips):
        mu0 *= mus[j]
        mus[j] = 1 / mus[j]
    return SatakeParams(
        degree=sp.degree,
        weight=sp.weight,
        p=sp.p,
        mu0=mu0,
        mu=tuple(mus[j] for j in w.perm),
    )


def weyl_orbit(sp: SatakeParams) -> list[SatakeParams]:
    """Images of sp under every group element, duplicates retained."""
    return [weyl_apply(w, sp) for w in weyl_group(sp.degree)]


@dataclass(frozen=True)
class EigenvalueEntry:
    """Hecke data of one eigenform at one prime; integers are exact."""

    p: int
    lam: int
    lam2: int | None = None


@dataclass(frozen=True)
class EigenvalueRecord:
    """Exact Hecke eigenvalues of a labelled eigenform at several primes."""

    label: str
    degree: int
    weight: int
    entries: tuple[EigenvalueEntry, ...]

    def __post_init__(self) -> None:
        ps = [e.p for e in self.entries]
        if any(q <= p for p, q in zip(ps, ps[1:])):
            raise ValueError("primes must be strictly increasing")

    def primes(self) -> tuple[int, ...]:
        return tuple(e.p for e in self.entries)

    def _entry(self, p: int) -> EigenvalueEntry:
        for e in self.entries:
            if e.p == p:
                return e
        raise ValueError(f"record {self.label!r} has no entry for prime {p}")

    def lambda_p(self, p: int) -> int:
        return self._entry(p).lam

    def lambda_p2(self, p: int) -> int:
        lam2 = self._entry(p).lam2
        if lam2 is None:
            raise ValueError(f"record {self.label!r} has no p^2 eigenvalue at {p}")
        return lam2

    def to_json_dict(self) -> dict:
        eigenvalues = []
        for e in self.entries:
            item = {"p": e.p, "lambda_p": str(e.lam)}
            if e.lam2 is not None:
                item["lambda_p2"] = str(e.lam2)
            eigenvalues.append(item)
        return {
            "label": self.label,
            "degree": self.degree,
            "weight": self.weight,
            "eigenvalues": eigenvalues,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "EigenvalueRecord":
        entries = tuple(
            EigenvalueEntry(
                p=int(item["p"]),
                lam=int(item["lambda_p"]),
                lam2=int(item["lambda_p2"]) if "lambda_p2" in item else None,
            )
            for item in data["eigenvalues"]
        )
        return cls(
            label=data["label"],
            degree=int(data["degree"]),
            weight=int(data["weight"]),
            entries=entries,
        )
