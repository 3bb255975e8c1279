import json
from fractions import Fraction

import pytest

from spinlift import localfactors, modforms, satake
from spinlift.modforms import QSeries


# ---------------------------------------------------------------- oracles

def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    # independent of the recurrence used in the package (B1 convention
    # differs, so compare only even indices)
    a = [Fraction(1, m + 1) for m in range(n + 1)]
    for j in range(1, n + 1):
        for m in range(n + 1 - j):
            a[m] = (m + 1) * (a[m] - a[m + 1])
    return a[0]


def naive_sigma(n: int, e: int) -> int:
    return sum(d**e for d in range(1, n + 1) if n % d == 0)


def _mul_trunc(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def naive_delta(order: int) -> list[int]:
    # q * prod (1 - q^n)^24 by repeated naive multiplication
    poly = [1] + [0] * order
    for n in range(1, order + 1):
        one_minus = [0] * (order + 1)
        one_minus[0] = 1
        one_minus[n] = -1
        for _ in range(24):
            poly = _mul_trunc(poly, one_minus, order)
    return [0] + poly[:order]


# ---------------------------------------------------------------- QSeries

def test_qseries_add_mul_with_denominators():
    a = QSeries._make([1, 2, 3], 2)
    b = QSeries._make([1, 0, 1], 3)
    s = a + b
    assert [s.coefficient(n) for n in range(3)] == [
        Fraction(5, 6),
        Fraction(1),
        Fraction(11, 6),
    ]
    p = a * b
    assert p.coefficient(0) == Fraction(1, 6)
    assert p.coefficient(2) == Fraction(3 + 1, 6)


def test_qseries_truncates_to_smaller_order():
    a = QSeries((1, 1, 1, 1))
    b = QSeries((1, 1))
    assert (a * b).order == 1
    assert (a + b).order == 1


def test_qseries_reduction_and_integrality():
    s = QSeries._make([2, 4, 6], 2)
    assert s.denom == 1
    assert s.integer_coefficient(2) == 3
    t = QSeries._make([1, 3], 2)
    with pytest.raises(ValueError):
        t.integer_coefficient(0)


def test_qseries_scale_and_neg():
    s = QSeries((1, -2, 4))
    assert (-s).coeffs == (-1, 2, -4)
    assert s.scale(Fraction(1, 2)).coefficient(1) == -1


def test_qseries_rejects_empty_and_bad_denominator():
    with pytest.raises(ValueError):
        QSeries(())
    with pytest.raises(ValueError):
        QSeries((1,), 0)


# ---------------------------------------------------------------- Bernoulli / Eisenstein

@pytest.mark.parametrize("n", range(2, 31, 2))
def test_bernoulli_against_independent_algorithm(n):
    assert modforms.bernoulli(n) == bernoulli_akiyama_tanigawa(n)


def test_bernoulli_small_values():
    assert modforms.bernoulli(0) == 1
    assert modforms.bernoulli(1) == Fraction(-1, 2)
    assert modforms.bernoulli(12) == Fraction(-691, 2730)
    assert modforms.bernoulli(14) == Fraction(7, 6)


@pytest.mark.parametrize(
    "k,first",
    [(4, 240), (6, -504), (8, 480), (10, -264), (14, -24)],
)
def test_eisenstein_linear_coefficients(k, first):
    e = modforms.eisenstein(k, 8)
    assert e.coefficient(0) == 1
    assert e.coefficient(1) == first


def test_eisenstein_rational_weight12():
    e = modforms.eisenstein(12, 6)
    assert e.coefficient(1) == Fraction(65520, 691)
    assert e.coefficient(2) == Fraction(65520, 691) * naive_sigma(2, 11)


def test_eisenstein_matches_divisor_sums():
    k = 14
    e = modforms.eisenstein(k, 20)
    for n in range(1, 21):
        assert e.coefficient(n) == -24 * naive_sigma(n, k - 1)


def test_eisenstein_rejects_bad_weights():
    for k in (2, 3, 7, 0, -4):
        with pytest.raises(ValueError):
            modforms.eisenstein(k, 8)


# ---------------------------------------------------------------- delta and the weight-26 form

def test_delta_against_naive_eta_product():
    order = 16
    dl = modforms.delta(order)
    assert [dl.integer_coefficient(n) for n in range(order + 1)] == naive_delta(order)


def test_delta_known_coefficients():
    dl = modforms.delta(8)
    assert dl.integer_coefficient(1) == 1
    assert dl.integer_coefficient(2) == -24
    assert dl.integer_coefficient(3) == 252


def test_delta_hecke_relations():
    dl = modforms.delta(64)
    tau = dl.integer_coefficient
    assert tau(4) == tau(2) ** 2 - 2**11
    assert tau(9) == tau(3) ** 2 - 3**11
    for m, n in [(2, 3), (2, 5), (3, 5), (4, 9), (3, 16), (5, 7)]:
        assert tau(m * n) == tau(m) * tau(n)


def test_delta_rejects_tiny_order():
    with pytest.raises(ValueError):
        modforms.delta(1)


def test_newform26_normalization_and_values():
    g = modforms.newform_weight26(64)
    a = g.integer_coefficient
    assert a(1) == 1
    assert a(2) == -48
    # eigenform relations certify that delta * E14 is an eigenform
    assert a(4) == a(2) ** 2 - 2**25
    assert a(9) == a(3) ** 2 - 3**25
    for m, n in [(2, 3), (2, 5), (3, 4), (5, 7)]:
        assert a(m * n) == a(m) * a(n)


def test_newform26_is_delta_times_e14():
    g = modforms.newform_weight26(6)
    dl = modforms.delta(6)
    e = modforms.eisenstein(14, 6)
    prod = dl * e
    assert g.coeffs == prod.coeffs and g.denom == prod.denom == 1


# ---------------------------------------------------------------- degree-2 lift data

def test_sk_eigenvalue_weight14():
    assert modforms.sk_eigenvalue(14, 2, -48) == 12240
    assert modforms.sk_eigenvalue(14, 2, -48) == 8192 - 48 + 4096


def test_sk_satake_normalization_and_eigenvalue():
    sp = modforms.saito_kurokawa_satake(14, 2, -48)
    assert satake.check_normalization(sp)
    assert abs(satake.hecke_eigenvalue(sp) - 12240) <= 1e-9 * 12240
    assert not satake.ramanujan_check(sp)
    # the representative puts beta0 at p^(k-1)
    assert abs(sp.mu0 - 2**13) == 0


def test_sk_satake_moduli():
    sp = modforms.saito_kurokawa_satake(14, 2, -48)
    for x in sp.mu:
        assert abs(abs(x) - 2**-0.5) <= 1e-9


def test_sk_spin_factor_splits():
    # degree-4 spin factor = (1 - p^(k-1)X)(1 - p^(k-2)X)(1 - a_p X + p^(2k-3)X^2)
    k, p, a_p = 14, 2, -48
    lam = modforms.sk_eigenvalue(k, p, a_p)
    lam2 = modforms.sk_eigenvalue_psquared(k, p, a_p)
    exact = localfactors.gsp4_spin_factor_exact(k, p, lam, lam2)
    expanded = [1]
    for fac in ([1, -(p ** (k - 1))], [1, -(p ** (k - 2))], [1, -a_p, p ** (2 * k - 3)]):
        expanded = localfactors.poly_mul(expanded, fac)
    assert list(exact.coeffs) == expanded


@pytest.mark.parametrize("k,p,a_p", [(14, 2, -48), (14, 3, -195804), (12, 5, 7), (20, 2, 0)])
def test_sk_component_roundtrip(k, p, a_p):
    lam = modforms.sk_eigenvalue(k, p, a_p)
    lam2 = modforms.sk_eigenvalue_psquared(k, p, a_p)
    assert modforms.sk_component_eigenvalue(k, p, lam, lam2) == a_p


def test_sk_component_rejects_non_lift_data():
    assert modforms.sk_component_eigenvalue(14, 2, 12240, 66521344 + 1) is None


# ---------------------------------------------------------------- fixtures

def test_fixture_records_stock_values():
    records = {r.label: r for r in modforms.fixture_records(7)}
    assert set(records) == {"Delta.12.1", "SK.14.2", "g26.26.1"}
    assert records["Delta.12.1"].lambda_p(2) == -24
    assert records["Delta.12.1"].lambda_p2(2) == (-24) ** 2 - 2**11
    assert records["g26.26.1"].lambda_p(2) == -48
    assert records["SK.14.2"].lambda_p(2) == 12240
    assert records["SK.14.2"].weight == 14 and records["SK.14.2"].degree == 2


def test_fixture_psquare_data_matches_expansions():
    records = {r.label: r for r in modforms.fixture_records(7, order=64)}
    dl = modforms.delta(64)
    g26 = modforms.newform_weight26(64)
    for p in (2, 3, 5, 7):
        assert records["Delta.12.1"].lambda_p2(p) == dl.integer_coefficient(p * p)
        assert records["g26.26.1"].lambda_p2(p) == g26.integer_coefficient(p * p)


def test_fixture_write_is_deterministic(tmp_path):
    path_a = tmp_path / "a.json"
    path_b = tmp_path / "b.json"
    modforms.write_fixtures(path_a, prime_bound=5)
    modforms.write_fixtures(path_b, prime_bound=5)
    assert path_a.read_bytes() == path_b.read_bytes()
    records = modforms.load_fixtures(path_a)
    assert records["SK.14.2"].lambda_p(5) == modforms.sk_eigenvalue(
        14, 5, modforms.newform_weight26(8).integer_coefficient(5)
    )


def test_fixture_bound_two_gives_single_prime(tmp_path):
    records = {r.label: r for r in modforms.fixture_records(2)}
    assert records["Delta.12.1"].primes() == (2,)


def test_load_fixtures_rejects_bad_schema(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema_version": 99, "records": []}))
    with pytest.raises(ValueError):
        modforms.load_fixtures(path)


def test_fixture_record_json_decimal_strings(tmp_path):
    path = tmp_path / "f.json"
    modforms.write_fixtures(path, prime_bound=3)
    data = json.loads(path.read_text())
    entry = data["records"][0]["eigenvalues"][0]
    assert isinstance(entry["lambda_p"], str)
    assert isinstance(entry["p"], int)
