import csv
import io

import pytest
from hypothesis import given, strategies as st

from lambda_hopf import hopf
from lambda_hopf.binomial import binom, binom_classical, binom_table, binom_table_csv
from lambda_hopf.hopf import LinearEndo, symbolic_context


def series_coefficients(x: int, order: int) -> list[int]:
    """Coefficients of ``(1+z)^x`` up to ``z^order`` by repeated series products."""
    out = [1] + [0] * order
    factor = [1, 1] + [0] * (order - 1) if x >= 0 else [(-1) ** k for k in range(order + 1)]
    for _ in range(abs(x)):
        out = [sum(out[i] * factor[k - i] for i in range(k + 1)) for k in range(order + 1)]
    return out


@pytest.mark.parametrize("x", range(-8, 9))
def test_matches_generating_function(x):
    coeffs = series_coefficients(x, 10)
    assert [binom(x, k) for k in range(11)] == coeffs
    assert [binom_classical(x, k) for k in range(11)] == coeffs


def test_examples():
    assert binom(5, 2) == 10
    assert binom(-1, 2) == 1
    assert binom(-3, -3) == 1
    assert binom(-2, -3) == -2
    assert binom(-2, -2) == 1


@given(st.integers(-40, 40))
def test_constant_term(x):
    assert binom(x, 0) == 1


@given(st.integers(-30, 30), st.integers(1, 30))
def test_pascal(x, k):
    assert binom(x, k) == binom(x - 1, k) + binom(x - 1, k - 1)


@given(st.integers(-30, 30), st.integers(-30, -1))
def test_negative_k_rules(x, k):
    assert binom_classical(x, k) == 0
    assert binom(x, k) == (binom(x, x - k) if x - k >= 0 else 0)


@given(st.integers(0, 25), st.integers(0, 25))
def test_vanishes_above_top(x, k):
    if k > x:
        assert binom(x, k) == 0


@given(st.integers(0, 20), st.integers(0, 20))
def test_upper_negation(A, i):
    assert binom(-A, i) == (-1) ** i * binom(A + i - 1, i)


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_vandermonde(A, B, C):
    assert sum(binom(A, j) * binom(B, C - j) for j in range(C + 1)) == binom(A + B, C)


def test_rules_agree_when_k_nonnegative():
    for x in range(-10, 11):
        for k in range(0, 11):
            assert binom(x, k) == binom_classical(x, k)


def _brute_force_endo(ctx, images):
    return LinearEndo(ctx, tuple(images), "S?")


def test_negative_values_forced_by_antipode_axiom():
    """Search small integers for the unknowns in S(a_0), S(a_1) against the axiom."""
    ctx = symbolic_context()
    L = ctx.lam
    ident = hopf.identity_endo(ctx, 1)
    target = hopf.eta_eps(ctx, 1)
    rng = range(-4, 5)
    found0 = [c for c in rng
              if hopf.convolution(_brute_force_endo(ctx, [ctx.basis(0, c)]),
                                  hopf.identity_endo(ctx, 0), 0) == target.image(0)]
    assert found0 == [1]  # the coefficient binom(-3, -3)
    found1 = []
    for u in rng:
        for w in rng:
            s1 = -(ctx.basis(0, L * u) + ctx.basis(1, w))
            S = _brute_force_endo(ctx, [ctx.basis(0), s1])
            if all(hopf.convolution(f, g, 1) == target.image(1) for f, g in ((S, ident), (ident, S))):
                found1.append((u, w))
    assert found1 == [(binom(-2, -3), binom(-2, -2))] == [(-2, 1)]


def test_table_layout():
    rows = binom_table(2, 1)
    assert len(rows) == 5 and all(len(r) == 3 for r in rows)
    assert rows[2] == [binom(0, -1), binom(0, 0), binom(0, 1)]
    parsed = list(csv.reader(io.StringIO(binom_table_csv(2, 1))))
    assert parsed[0] == ["x\\k", "-1", "0", "1"]
    assert parsed[1][0] == "-2"
    classical = binom_table(2, 1, rule=binom_classical)
    assert all(row[0] == 0 for row in classical)


def test_pascal_exhaustive_square():
    bad = [(x, k) for x in range(-20, 21) for k in range(-20, 21)
           if (x, k) != (0, 0) and binom(x, k) != binom(x - 1, k) + binom(x - 1, k - 1)]
    assert bad == []
    assert binom(0, 0) != binom(-1, 0) + binom(-1, -1)  # the one excluded point


def test_vanishing_exhaustive():
    assert all(binom(x, k) == 0 for x in range(21) for k in range(-20, 21) if k < 0 or k > x)


def test_symmetric_rule_matches_third_region_formula():
    # for x < 0 and k < 0 with x - k >= 0: (-1)^(x-k) binom(-k-1, x-k)
    for x in range(-12, 0):
        for k in range(-12, 0):
            if x - k >= 0:
                assert binom(x, k) == (-1) ** (x - k) * binom(-k - 1, x - k)
