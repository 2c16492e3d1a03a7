import pytest
from hypothesis import given, strategies as st

from lambda_hopf import hopf
from lambda_hopf.binomial import binom, binom_classical
from lambda_hopf.hopf import (
    DegreeBoundError,
    GradedElement,
    TensorElement2,
    make_context,
    specialize_element,
    symbolic_context,
)
from lambda_hopf.ring import IntegerRing, ModularRing, RationalRing, RingMismatchError, parse_ring

from conftest import concrete_context

ZL = symbolic_context()
L = ZL.lam


def a(n, c=1, ctx=ZL):
    return ctx.basis(n, c)


def t(i, j, c=1, ctx=ZL):
    return TensorElement2(ctx, {(i, j): ctx.scalar(c)})


def baxter_products(ctx, N):
    """Products ``a_m a_n`` for ``m, n <= N`` from ``a_0 a_n = a_n`` and the Baxter identity.

    With ``P`` the shift, ``a_{m+1} a_{n+1} = P(a_m a_{n+1}) + P(a_{m+1} a_n) + lam P(a_m a_n)``;
    only the shift and addition are used, never the product formula.
    """
    P = hopf.baxter_P
    table = {}
    for m in range(N + 1):
        for n in range(N + 1):
            if m == 0:
                table[m, n] = ctx.basis(n)
            elif n == 0:
                table[m, n] = ctx.basis(m)
            else:
                table[m, n] = (P(table[m - 1, n]) + P(table[m, n - 1])
                               + P(table[m - 1, n - 1]).scale(ctx.lam))
    return table


# -- examples ---------------------------------------------------------------------


def test_unit():
    assert hopf.unit(ZL) == a(0)
    assert hopf.counit(hopf.unit(ZL)) == ZL.ring.one


def test_basis_mul_examples():
    assert ZL.basis_mul(0, 5) == a(5)
    assert ZL.basis_mul(1, 1) == a(2, 2) + a(1, L)
    assert ZL.basis_mul(1, 2) == a(3, 3) + a(2, 2 * L)
    zero = make_context(IntegerRing(), 0)
    assert zero.basis_mul(1, 1) == zero.basis(2, 2)


def test_comul_examples():
    assert ZL.comul_basis(0) == t(0, 0)
    assert ZL.comul_basis(1) == t(0, 1) + t(1, 0) - t(0, 0, L)
    expected = (t(0, 2) + t(1, 1) + t(2, 0) - t(0, 1, L) - t(1, 0, L) + t(0, 0, L ** 2))
    assert ZL.comul_basis(2) == expected


def test_counit_examples():
    assert ZL.counit_basis(0) == ZL.ring.one
    assert ZL.counit_basis(1) == L
    assert hopf.counit(a(2) + a(5, 7)) == ZL.ring.zero


def test_antipode_examples():
    assert ZL.antipode_basis(0) == a(0)
    assert ZL.antipode_basis(1) == a(0, 2 * L) - a(1)
    assert ZL.antipode_basis(2) == a(0, L ** 2) - a(1, L) + a(2)


def test_convolution_examples():
    ident = hopf.identity_endo(ZL, 2)
    S = hopf.antipode_endo(ZL, 2)
    assert hopf.convolution(ident, ident, 0) == a(0)
    assert hopf.convolution(S, ident, 1) == a(0, L)
    assert hopf.eta_eps(ZL, 1).image(1) == a(0, L)
    assert ident.image(2) == a(2)
    assert S.image(2) == a(0, L ** 2) - a(1, L) + a(2)


def test_shift_and_tensor_helpers():
    assert hopf.baxter_P(a(0)) == a(1)
    assert hopf.baxter_P(a(2, 3) + a(5)) == a(3, 3) + a(6)
    assert hopf.flip(t(1, 2)) == t(2, 1)
    left = hopf.comul_left(t(0, 0))
    assert left.terms == {(0, 0, 0): ZL.ring.one}
    assert hopf.tensor(a(1), a(2, L)) == t(1, 2, L)
    assert hopf.mu(t(1, 1)) == ZL.basis_mul(1, 1)


def test_rendering():
    assert ZL.basis_mul(1, 1).render(key=lambda d: -d) == "2*a2 + L*a1"
    assert str(ZL.antipode_basis(2)) == "L^2*a0 - L*a1 + a2"
    assert str(ZL.comul_basis(0)) == "a0⊗a0"
    assert str(a(3, L + 1)) == "(L + 1)*a3"
    assert ZL.basis_mul(1, 2).to_json() == {"2": "2*L", "3": "3"}
    assert ZL.comul_basis(1).to_json() == {"0,0": "-L", "0,1": "1", "1,0": "1"}


# -- closed-form oracles ------------------------------------------------------------


@pytest.mark.parametrize("n", range(13))
def test_comul_coefficients(n):
    d = ZL.comul_basis(n)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            assert d.coefficient((i, j)) == (-L) ** (n - i - j)
    assert len(d.terms) == (n + 1) * (n + 2) // 2


def test_mul_matches_baxter_recursion():
    table = baxter_products(ZL, 8)
    for (m, n), expected in table.items():
        assert ZL.basis_mul(m, n) == expected, (m, n)


def test_antipode_matches_convolution_inverse():
    solved = hopf.solve_antipode(ZL, 12)
    for n, s in enumerate(solved):
        assert s == ZL.antipode_basis(n), n


def test_solver_over_concrete_ring(concrete):
    solved = hopf.solve_antipode(concrete, 6)
    assert all(s == concrete.antipode_basis(n) for n, s in enumerate(solved))


def test_classical_antipode_rule_breaks_degree_zero():
    bad = symbolic_context(antipode_rule=binom_classical)
    assert bad.antipode_basis(0) == bad.zero()
    assert hopf.solve_antipode(bad, 0)[0] == bad.basis(0)


@pytest.mark.parametrize("n", range(13))
def test_weight_zero_is_classical_divided_powers(n):
    ctx = make_context(IntegerRing(), 0)
    for m in range(13 - n):
        assert ctx.basis_mul(m, n) == ctx.basis(m + n, binom(m + n, m))
    deconcat = TensorElement2(ctx, {(i, n - i): ctx.ring.one for i in range(n + 1)})
    assert ctx.comul_basis(n) == deconcat
    assert ctx.antipode_basis(n) == ctx.basis(n, (-1) ** n)
    assert ctx.counit_basis(n) == (ctx.ring.one if n == 0 else ctx.ring.zero)


# -- specialization -------------------------------------------------------------------


def _same_constants(sym, ctx, N):
    for n in range(N + 1):
        assert specialize_element(sym.comul_basis(n), ctx) == ctx.comul_basis(n)
        assert specialize_element(sym.antipode_basis(n), ctx) == ctx.antipode_basis(n)
        assert specialize_element(sym.basis(0, sym.counit_basis(n)), ctx) == \
            ctx.basis(0, ctx.counit_basis(n))
        for m in range(N + 1 - n):
            assert specialize_element(sym.basis_mul(m, n), ctx) == ctx.basis_mul(m, n)


@given(st.integers(0, 5))
def test_specialization_z6(c):
    ring = ModularRing(6)
    _same_constants(ZL, make_context(ring, c), 6)


@given(st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_specialization_f5_poly(coeffs):
    ring = parse_ring("F5[x]/x^3")
    x = ring.generator
    lam = coeffs[0] + coeffs[1] * x + coeffs[2] * x ** 2
    _same_constants(ZL, make_context(ring, lam), 5)


def test_specialization_concrete(concrete):
    _same_constants(ZL, concrete, 6)


def test_specialize_requires_symbolic_source():
    ctx = make_context(IntegerRing(), 1)
    with pytest.raises(RingMismatchError):
        specialize_element(ctx.basis(1), ctx)


# -- algebraic sanity under random elements ---------------------------------------------


def elements(ctx, max_degree=6):
    coeff = st.integers(-3, 3)
    return st.dictionaries(st.integers(0, max_degree), coeff, max_size=4).map(
        lambda d: GradedElement(ctx, {k: ctx.scalar(v) for k, v in d.items()}))


@given(elements(ZL), elements(ZL))
def test_mul_commutes(x, y):
    assert x * y == y * x


@given(elements(ZL, 4), elements(ZL, 4), elements(ZL, 4))
def test_mul_associative_and_distributive(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(elements(ZL))
def test_unit_law_random(x):
    assert hopf.mul(hopf.unit(ZL), x) == x


@given(elements(ZL, 5), elements(ZL, 5))
def test_comul_is_multiplicative_on_random_elements(x, y):
    assert hopf.comul(x * y) == hopf.mul2(hopf.comul(x), hopf.comul(y))


@given(elements(ZL, 5))
def test_antipode_axiom_on_random_elements(x):
    u = hopf.comul(x)
    ident = hopf.identity_endo(ZL, 5)
    S = hopf.antipode_endo(ZL, 5)
    expected = hopf.unit(ZL).scale(hopf.counit(x))
    assert hopf.mu(hopf.apply_legs(S, ident, u)) == expected


# -- errors ---------------------------------------------------------------------------


def test_degree_bounds():
    S = hopf.antipode_endo(ZL, 2)
    with pytest.raises(DegreeBoundError):
        S.image(3)
    with pytest.raises(DegreeBoundError):
        hopf.convolution(S, hopf.identity_endo(ZL, 5), 3)
    with pytest.raises(ValueError):
        ZL.basis(-1)
    with pytest.raises(ValueError):
        a(1) ** 0


def test_ring_mismatch():
    q = make_context(RationalRing(), 1)
    with pytest.raises(RingMismatchError):
        a(1) + q.basis(1)
    with pytest.raises(RingMismatchError):
        make_context(RationalRing(), IntegerRing().one)
    with pytest.raises(TypeError):
        a(1) + t(0, 1)


def test_zero_coefficients_dropped():
    assert a(3, 0) == ZL.zero()
    assert not (a(2) - a(2))
    assert (a(2) - a(2)).degree() == -1


def test_structure_constants_memoised():
    ctx = concrete_context("Z/6", "4")
    assert ctx.basis_mul(3, 4) is ctx.basis_mul(3, 4)
