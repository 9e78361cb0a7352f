import pytest

import polyfunc
from polyfunc import Ring


def test_counts_over_z():
    z = Ring.integers()
    assert polyfunc.count(z, ["4"], "4") == 64
    assert polyfunc.count(z, ["6"], "6") == 108
    assert polyfunc.count(z, ["2"], "4") == 16
    assert polyfunc.count(z, ["3", "2"], "6") == 11664


def test_counts_are_exact_big_integers():
    z = Ring.integers()
    # N(p) = p^p for prime p; python ints keep this exact
    assert polyfunc.count(z, ["23"], "23") == 23**23
    assert polyfunc.count_prime_power(z, "27", r=2) == 3**90


def test_counts_over_gf():
    f2 = Ring.gf(2)
    assert f2.q == 2
    assert polyfunc.count(f2, ["t^2"], "t^2") == 64
    assert polyfunc.count_poly_ring(f2, ["t"], "t^2") == 16
    f9 = Ring.gf(3, 2)
    assert f9.q == 9


def test_closed_forms_cross_check():
    z = Ring.integers()
    assert polyfunc.count_chen([3, 2], 6) == polyfunc.count(z, ["3", "2"], "6")
    assert polyfunc.count_prime_power(z, "8") == 1024


def test_canonical_and_equivalence():
    z = Ring.integers()
    terms = polyfunc.canonicalize(z, ["4"], "4", "x^2")
    assert terms == [
        {"k": (1,), "coeff": "1", "modulus": "4"},
        {"k": (2,), "coeff": "1", "modulus": "2"},
    ]
    assert polyfunc.canonical_monomial(z, ["4"], "4", "x*(x-1)+x") == "x^2"
    assert polyfunc.equivalent(z, ["2"], "2", "x^2", "x")
    assert not polyfunc.equivalent(z, ["4"], "4", "x^2", "x")


def test_tables_and_interpolation():
    z = Ring.integers()
    assert polyfunc.table(z, ["4"], "4", "x^2") == ["0", "1", "0", "1"]
    good = polyfunc.interpolate(z, ["4"], "4", ["0", "1", "0", "1"])
    assert good["realizable"]
    assert good["monomial"] == "x^2"
    bad = polyfunc.interpolate(z, ["4"], "4", ["0", "0", "1", "0"])
    assert not bad["realizable"]
    assert "2*b = 1 (mod 4)" in bad["witness"]


def test_orderings_and_factorials():
    f2 = Ring.gf(2)
    assert polyfunc.simultaneous_term(f2, 6) == "t^2 + t"
    assert polyfunc.generalized_factorial(f2, 4) == "t^8 + t^6 + t^5 + t^3"
    assert polyfunc.factorial_ideal(Ring.integers(), "4", 3) == "6"
    assert polyfunc.ordering_cross_check(Ring.integers(), "12")
    assert polyfunc.lambda_bound(f2, "t^2") == 4
    assert polyfunc.mu_bound(f2, "t^2", "t^2") == 4


def test_oracle_and_budget():
    z = Ring.integers()
    assert polyfunc.brute_force_count(z, ["4"], "4") == 64
    assert polyfunc.is_realizable(z, ["4"], "4", ["0", "1", "0", "1"])
    assert not polyfunc.is_realizable(z, ["4"], "4", ["0", "0", "1", "0"])
    with pytest.raises(polyfunc.BudgetError):
        polyfunc.brute_force_count(z, ["4"], "4", budget=10)


def test_errors():
    z = Ring.integers()
    with pytest.raises(polyfunc.DomainError):
        polyfunc.count(z, ["1"], "4")
    with pytest.raises(polyfunc.ParseError):
        polyfunc.table(z, ["4"], "4", "x^^2")


def test_cli_entry_point():
    code, out, err = polyfunc.run_cli(["count", "--ring", "z", "-n", "4", "-m", "4"])
    assert code == 0
    assert out.splitlines()[0] == "64"
    assert err == ""
