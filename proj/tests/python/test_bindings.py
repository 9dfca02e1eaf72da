"""Smoke tests for the Python extension module."""

import os
from fractions import Fraction

import pytest

import weilden

FIXTURES = os.environ.get("WEILDEN_FIXTURES", "tests/data/fixtures.jsonl")
SEXTIC = [1, 10, 48, 151, 336, 490, 343]


@pytest.fixture(scope="module")
def sextic():
    return weilden.WeilPolynomial(SEXTIC, 7)


def test_polynomial_accessors(sextic):
    assert sextic.g == 3 and sextic.p == 7 and sextic.q == 7
    assert sextic.coeffs == SEXTIC
    assert sextic.real_weil() == [1, 10, 27, 11]
    assert sextic.conductor() == 343
    assert sextic.order_discriminant() == -(19 ** 5)


def test_big_q_round_trips():
    q = 2 ** 89 - 1  # a Mersenne prime
    f = weilden.WeilPolynomial([1, 0, q], q)
    assert f.q == q and f.coeffs == [1, 0, q]


def test_errors_carry_codes():
    with pytest.raises(weilden.WeildenError) as info:
        weilden.WeilPolynomial([1, 10, 48, 151, 336, 491, 343], 7)
    assert info.value.args[0] == "SymmetryViolation"


def test_local_factors(sextic):
    two = weilden.nu_ell(sextic, 2)
    assert two["shape"] == "[2g]"
    assert two["nu_f"] == Fraction(8, 9) == two["nu_K"]
    assert weilden.nu_p(sextic) == Fraction(7, 6) ** 3
    rows = weilden.local_table(sextic, [2, 7])
    assert rows[1]["status"] == "ok(nu_p)"


def test_validation_and_archimedean(sextic):
    v = weilden.validate(sextic)
    assert v["ordinary"] == "verified" and v["maximal"] == "verified"
    a = weilden.archimedean(sextic)
    assert a["disc_fplus"] == "361"
    assert weilden.nu_infinity(sextic) == pytest.approx(0.333880301000042)


def test_centralizers():
    assert weilden.centralizer_order("[2g]", 2, 3) == 9
    assert weilden.gsp_order(3, 2) == 1451520
    cells = weilden.centralizer_matrix(3, [7])
    assert all(c["status"] == "equal" for c in cells)


def test_product_and_compare(sextic):
    c = weilden.partial_product(sextic, 3, "sextic19-q7")
    assert weilden.checkpoint_product(c)["exact"] == Fraction(8, 9)
    c = weilden.partial_product(sextic, 20000, "sextic19-q7", resume=c, threads=2)
    report = weilden.compare(FIXTURES, "sextic19-q7", c)
    assert report["reference"] == "1/2"
    assert report["rel_error"] < 0.1


def test_fixtures_load():
    fx = {f["label"]: f for f in weilden.load_fixtures(FIXTURES)}
    assert fx["sextic19-q7"]["reference"] == Fraction(1, 2)
    assert len(fx) >= 4
