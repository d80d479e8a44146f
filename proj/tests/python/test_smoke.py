import json
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

import beukers

SCHEMA = json.loads((Path(__file__).resolve().parents[2] / "docs" / "report-schema.json").read_text())


def test_linear_forms():
    i2 = beukers.beukers_I(2)
    assert i2.kind == 2
    assert i2.rat == Fraction(-125, 4)
    assert i2.zcoef == 19
    j2 = beukers.beukers_J(2)
    assert (j2.rat, j2.zcoef) == (Fraction(-351, 2), 146)
    assert beukers.i_rs(2, 2).rat == Fraction(-5, 4)
    lo, hi = beukers.i_rs(0, 0).realize(30)
    assert abs(lo - Fraction(16449340668482264, 10**16)) < Fraction(1, 10**15)
    assert hi - lo < Fraction(1, 10**29)


def test_integerize_returns_python_ints():
    row = beukers.integerize(3, 30)
    assert isinstance(row["a"], int)
    # d_30^3 is far beyond 64 bits; the value must survive the round trip.
    assert row["d_n"] == beukers.dn(30)
    assert row["c"] == row["b"] * row["d_n"] ** 3


def test_legendre_constructions_agree():
    for n in range(12):
        assert beukers.legendre(n) == beukers.legendre_rodrigues(n)
    assert beukers.legendre(2) == [1, -6, 6]


def test_dn_and_primes():
    assert beukers.primes(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert beukers.dn(10) == 2520
    assert beukers.dn_prime_powers(97) == beukers.dn(97)


def test_series_oracle_matches_form():
    lo, hi = beukers.series_Jn(1, 5000)
    flo, fhi = beukers.beukers_J(1).realize()
    assert lo <= fhi and flo <= hi


def test_chain_and_maxima():
    rows = beukers.verify_chain(2, 5)
    assert [r["holds"] for r in rows] == [True] * 5
    m3 = beukers.max_g3()
    assert m3["value"] == "17 - 12*sqrt(2)"
    assert m3["residuals_vanish"]


def test_contradiction():
    r = beukers.contradiction_threshold(2, 100, 7)
    assert r["n_star"] == 4
    assert r["product_at_n_star"][1] < 1
    with pytest.raises(ValueError):
        beukers.contradiction_threshold(2, 4, 2)


@pytest.mark.parametrize(
    "args",
    [
        ["forms", "--zeta", "2", "--n-max", "6"],
        ["verify", "--zeta", "3", "--n-max", "8"],
        ["dn", "--limit", "30"],
        ["maxima"],
        ["oracle-check", "--n-max", "2", "--terms", "2000"],
        ["contradict", "--zeta", "3", "--p", "6", "--q", "5"],
    ],
)
def test_cli_json_matches_schema(args):
    code, out, err = beukers.run_cli(args)
    assert code == 0, err
    jsonschema.validate(json.loads(out), SCHEMA)


def test_cli_usage_error():
    code, _, err = beukers.run_cli(["contradict", "--p", "4", "--q", "2"])
    assert code == 2
    assert "coprime" in err


def test_big_integers_round_trip():
    big = beukers.dn(20000)
    assert big.bit_length() > 20000
    assert beukers.dn_prime_powers(20000) == big
    # Huge arguments cross the boundary intact: the common factor 2 is still found.
    with pytest.raises(ValueError):
        beukers.contradiction_threshold(3, 2 * 10**5000, 4)
    assert beukers.contradiction_threshold(2, 10**30 + 1, 3)["n_star"] > 0
