"""The torus lifting from GL(2) x GSp(4) Satake data to degree 3.

The lift sends ((alpha0, alpha1), (beta0, beta1, beta2)) to
(alpha0*beta0; beta1, beta2, alpha1).  Two identities make it checkable at
desk scale: the degree-3 normalization is the product of the component
normalizations, and the spin trace factors, so Hecke eigenvalues multiply.
On the level of local factors, the degree-8 spin polynomial of the lift
equals the tensor of the two component spin polynomials; this module
computes both sides by genuinely different exact routes and compares them
coefficientwise.

The lift is a construction on Satake data only; whether it comes from an
automorphic form is an assumption carried as the ``primitive`` input flag,
never a claim checked here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from . import hodge, modforms
from .localfactors import (
    LocalFactor,
    companion_matrix,
    gl2_factor_exact,
    gsp4_spin_factor_exact,
    poly_add,
    poly_mul,
    spin_character_values,
    spin_local_factor,
    tensor_local_factor,
)
from .satake import EigenvalueRecord, SatakeParams, satake_from_gl2

NUMERIC_REL_TOL = 1e-6


@dataclass(frozen=True)
class LiftInput:
    """One prime's worth of input data for the lift.

    Exact eigenvalue data, when supplied, must describe the same forms as
    the numeric Satake parameters; it unlocks the exact verification routes.
    ``primitive`` records the standing assumption that the degree-2 form has
    nontrivial leading Fourier-Jacobi data; nothing here can check it.
    """

    gl2: SatakeParams
    gsp4: SatakeParams
    gl2_data: tuple[int, int] | None = None  # (weight, a_p)
    gsp4_data: tuple[int, int, int] | None = None  # (weight, lam_p, lam_p2)
    primitive: bool = True

    def __post_init__(self) -> None:
        if self.gl2.degree != 1 or self.gsp4.degree != 2:
            raise ValueError("lift input needs a degree-1 and a degree-2 component")
        if self.gl2.p != self.gsp4.p:
            raise ValueError("components must share a prime")
        for k in (self.gl2.weight, self.gsp4.weight):
            if k % 2 or k <= 0:
                raise ValueError("component weights must be positive and even")
        if self.gl2_data is not None and self.gl2_data[0] != self.gl2.weight:
            raise ValueError("exact degree-1 data disagrees with parameter weight")
        if self.gsp4_data is not None and self.gsp4_data[0] != self.gsp4.weight:
            raise ValueError("exact degree-2 data disagrees with parameter weight")

    @property
    def p(self) -> int:
        return self.gl2.p


@dataclass(frozen=True)
class WeightCheck:
    """Typed outcome of the weight constraint; rejections carry the Hodge
    witness showing the product type matches no degree-3 type."""

    accepted: bool
    k: int | None
    witness: dict = field(default_factory=dict)


def lift_weights(k1: int, k2: int) -> WeightCheck:
    """Accept (k1, k2) iff k1 = k2 - 2, returning the lifted weight k2.

    A rejection is a normal outcome, not an error.  Its witness reports the
    unique weight K whose degree-3 Hodge type could carry the Kunneth
    product (if any) and the mismatch found there.
    """
    for k in (k1, k2):
        if k % 2 or k <= 0:
            raise ValueError("weights must be positive even integers")
    if k1 == k2 - 2:
        return WeightCheck(True, k2)
    product = hodge.kunneth_tensor(hodge.hodge_gl2(k1), hodge.hodge_gsp4(k2))
    witness: dict = {"kunneth_weight": product.weight}
    total = product.weight + 6
    if total % 3 == 0 and total // 3 % 2 == 0 and total // 3 >= 4:
        K = total // 3
        target = hodge.hodge_gsp6(K)
        witness["candidate_K"] = K
        witness["matches"] = product == target
        witness["kunneth_pairs"] = list(product.pairs)
        witness["target_pairs"] = list(target.pairs)
    else:
        witness["candidate_K"] = None
        witness["matches"] = False
    return WeightCheck(False, None, witness)


def theta_lift(inp: LiftInput, enforce_weights: bool = True) -> SatakeParams:
    """Degree-3 parameters (alpha0*beta0; beta1, beta2, alpha1).

    The output passes the degree-3 normalization check because the component
    normalizations multiply to p^(3k-6).  ``enforce_weights=False`` exists
    only so negative tests can build non-conforming data.
    """
    if enforce_weights:
        check = lift_weights(inp.gl2.weight, inp.gsp4.weight)
        if not check.accepted:
            raise ValueError(
                f"weights ({inp.gl2.weight}, {inp.gsp4.weight}) do not fit the "
                f"lift pattern (k-2, k); witness: {check.witness}"
            )
    return SatakeParams(
        degree=3,
        weight=inp.gsp4.weight,
        p=inp.p,
        mu0=inp.gl2.mu0 * inp.gsp4.mu0,
        mu=(inp.gsp4.mu[0], inp.gsp4.mu[1], inp.gl2.mu[0]),
    )


def lifted_spin_factor_exact(
    gl2_weight: int, a_p: int, gsp4_factor: LocalFactor
) -> LocalFactor:
    """Exact degree-8 spin factor of the lift, expanded along the lift itself.

    Each spin character of the lift pairs the two degree-1 inverse roots
    with one degree-2 spin character b, contributing the exact quadratic
    1 - a_p b X + p^(k1-1) b^2 X^2.  The product over the four characters is
    det(I - a_p X C + p^(k1-1) X^2 C^2) with C the companion matrix of the
    degree-2 factor, a polynomial determinant over the integers.  This is a
    different exact algorithm from the Kronecker-companion tensor route and
    serves as its counterpart in the two-route comparison.
    """
    if not gsp4_factor.exact:
        raise ValueError("exact lifted factor needs an exact degree-2 factor")
    if gsp4_factor.degree != 4:
        raise ValueError("the degree-2 spin factor must have polynomial degree 4")
    p = gsp4_factor.p
    q = p ** (gl2_weight - 1)
    c1 = companion_matrix(gsp4_factor.coeffs)
    d = len(c1)
    c2 = [[sum(c1[i][m] * c1[m][j] for m in range(d)) for j in range(d)] for i in range(d)]
    entries = [
        [
            [1 if i == j else 0, -a_p * c1[i][j], q * c2[i][j]]
            for j in range(d)
        ]
        for i in range(d)
    ]
    det = _poly_det(entries)
    coeffs = tuple(det[: 2 * d + 1]) + (0,) * max(0, 2 * d + 1 - len(det))
    return LocalFactor(p=p, coeffs=coeffs, rep="spin-3", exact=True)


def _poly_det(entries: list[list[list[int]]]) -> list[int]:
    """Leibniz determinant of a small matrix with integer-polynomial entries."""
    d = len(entries)
    acc = [0]
    for perm in permutations(range(d)):
        inversions = sum(
            1 for i in range(d) for j in range(i + 1, d) if perm[i] > perm[j]
        )
        term = [1]
        for i in range(d):
            term = poly_mul(term, entries[i][perm[i]])
        if inversions % 2:
            term = [-c for c in term]
        acc = poly_add(acc, term)
    return acc


def lift_route_spin_factor(inp: LiftInput, exact: bool = True) -> LocalFactor:
    """Spin factor of the lifted parameters (exact route needs eigen data)."""
    if exact:
        if inp.gl2_data is None or inp.gsp4_data is None:
            raise ValueError("exact route requires exact eigenvalue data")
        k1, a_p = inp.gl2_data
        k2, lam, lam2 = inp.gsp4_data
        gsp4 = gsp4_spin_factor_exact(k2, inp.p, lam, lam2)
        return lifted_spin_factor_exact(k1, a_p, gsp4)
    return spin_local_factor(theta_lift(inp))


def tensor_route_spin_factor(inp: LiftInput, exact: bool = True) -> LocalFactor:
    """Tensor of the two component spin factors (exact or numeric)."""
    if exact:
        if inp.gl2_data is None or inp.gsp4_data is None:
            raise ValueError("exact route requires exact eigenvalue data")
        k1, a_p = inp.gl2_data
        k2, lam, lam2 = inp.gsp4_data
        return tensor_local_factor(
            gl2_factor_exact(k1, inp.p, a_p),
            gsp4_spin_factor_exact(k2, inp.p, lam, lam2),
        )
    gl2_chars = spin_character_values(inp.gl2)
    gsp4_chars = spin_character_values(inp.gsp4)
    coeffs = [1 + 0j]
    for a in gl2_chars:
        for b in gsp4_chars:
            coeffs = poly_mul(coeffs, [1, -a * b])
    return LocalFactor(p=inp.p, coeffs=tuple(coeffs), rep="tensor", exact=False)


@dataclass(frozen=True)
class TensorIdentityReport:
    ok: bool
    mode: str
    p: int
    lift_coeffs: tuple
    tensor_coeffs: tuple
    max_rel_diff: float

    def to_dict(self) -> dict:
        def render(cs):
            if all(isinstance(c, int) for c in cs):
                return [str(c) for c in cs]
            return [[c.real, c.imag] for c in cs]

        return {
            "ok": self.ok,
            "mode": self.mode,
            "p": self.p,
            "lift_coeffs": render(self.lift_coeffs),
            "tensor_coeffs": render(self.tensor_coeffs),
            "max_rel_diff": self.max_rel_diff,
        }


def verify_tensor_identity(
    inp: LiftInput, exact: bool = True, rel_tol: float = NUMERIC_REL_TOL
) -> TensorIdentityReport:
    """Compare the lifted spin factor against the tensor factor coefficientwise.

    Exact mode demands integer equality; numeric mode allows rel_tol
    relative error per coefficient (with an absolute floor of 1).
    """
    lhs = lift_route_spin_factor(inp, exact)
    rhs = tensor_route_spin_factor(inp, exact)
    if exact:
        ok = lhs.coeffs == rhs.coeffs
        diff = 0.0 if ok else 1.0
    else:
        diff = 0.0
        for x, y in zip(lhs.coeffs, rhs.coeffs):
            scale = max(1.0, abs(x), abs(y))
            diff = max(diff, abs(x - y) / scale)
        ok = diff <= rel_tol
    return TensorIdentityReport(
        ok=ok,
        mode="exact" if exact else "numeric",
        p=inp.p,
        lift_coeffs=lhs.coeffs,
        tensor_coeffs=rhs.coeffs,
        max_rel_diff=diff,
    )


def verify_eigenvalue_product(
    h: EigenvalueRecord,
    g: EigenvalueRecord,
    p: int,
    expected: int | None = None,
):
    """Product of the two T_p eigenvalues, the predicted degree-3 eigenvalue.

    With ``expected`` given, returns whether the product matches exactly;
    otherwise returns the product itself.
    """
    product = h.lambda_p(p) * g.lambda_p(p)
    if expected is None:
        return product
    return product == expected


def lift_input_from_records(
    h: EigenvalueRecord, g: EigenvalueRecord, p: int
) -> LiftInput:
    """Assemble a LiftInput at p from stored eigenvalue records.

    The degree-2 record must carry T_{p^2} data of lift type so that its
    numeric Satake parameters can be reconstructed.
    """
    if h.degree != 1:
        raise ValueError(f"record {h.label!r} is not a degree-1 form")
    if g.degree != 2:
        raise ValueError(f"record {g.label!r} is not a degree-2 form")
    a_p = h.lambda_p(p)
    lam, lam2 = g.lambda_p(p), g.lambda_p2(p)
    a_g = modforms.sk_component_eigenvalue(g.weight, p, lam, lam2)
    if a_g is None:
        raise ValueError(
            f"record {g.label!r} at p={p} is not of lift type; "
            "numeric degree-2 parameters are unavailable"
        )
    return LiftInput(
        gl2=satake_from_gl2(h.weight, p, a_p),
        gsp4=modforms.saito_kurokawa_satake(g.weight, p, a_g),
        gl2_data=(h.weight, a_p),
        gsp4_data=(g.weight, lam, lam2),
    )


def synthetic_lift_input(k: int, p: int) -> LiftInput:
    """Weight-(k-2, k) input with a_p = 0 components, for sweeps over k.

    The degree-1 parameters sit on the unit circle after normalization and
    the degree-2 component is of lift type, so every structural property the
    cuspidality engine relies on holds at any even k >= 4.
    """
    if k % 2 or k < 4:
        raise ValueError("k must be even and at least 4")
    return LiftInput(
        gl2=satake_from_gl2(k - 2, p, 0),
        gsp4=modforms.saito_kurokawa_satake(k, p, 0),
        gl2_data=(k - 2, 0),
        gsp4_data=(
            k,
            modforms.sk_eigenvalue(k, p, 0),
            modforms.sk_eigenvalue_psquared(k, p, 0),
        ),
    )
