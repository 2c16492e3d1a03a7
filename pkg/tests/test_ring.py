import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lambda_hopf.ring import (
    IntegerRing,
    ModularRing,
    PolyQuotientRing,
    RationalRing,
    RingMismatchError,
    RingParseError,
    SymbolicLambdaRing,
    make_poly_quotient,
    parse_element,
    parse_ring,
    specialize,
)

RING_SPECS = ["Z", "Q", "Z/6", "Z/7", "F5[x]/x^3", "Z[x]/x^2", "Z/4[x]/x^2", "Z[L]"]

small = st.integers(-30, 30)


def build(ring, data: list[int]):
    """Small ring element from a few integers, using the generator when there is one."""
    gen = ring.symbols()
    out = ring.zero
    power = ring.one
    g = next(iter(gen.values())) if gen else ring.one
    for c in data:
        out = out + power * c
        power = power * g
    return out


elements = st.lists(small, min_size=1, max_size=3)


@pytest.mark.parametrize("spec", RING_SPECS)
@given(a=elements, b=elements, c=elements)
def test_ring_axioms(spec, a, b, c):
    ring = parse_ring(spec)
    x, y, z = build(ring, a), build(ring, b), build(ring, c)
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + ring.zero == x
    assert x * ring.one == x
    assert x - x == ring.zero


@pytest.mark.parametrize("spec", RING_SPECS)
@given(a=small, b=small)
def test_from_integer_is_homomorphism(spec, a, b):
    ring = parse_ring(spec)
    assert ring.from_integer(a) + ring.from_integer(b) == ring.from_integer(a + b)
    assert ring.from_integer(a) * ring.from_integer(b) == ring.from_integer(a * b)


@pytest.mark.parametrize("n", range(2, 101))
def test_modular_units_match_gcd(n):
    ring = ModularRing(n)
    for a in range(n):
        inv = ring.is_unit(ring.from_integer(a))
        assert (inv is not None) == (math.gcd(a, n) == 1)
        if inv is not None:
            assert inv * a == ring.one


def test_poly_quotient_units_and_nilpotents():
    ring = parse_ring("F5[x]/x^3")
    x = ring.generator
    assert x ** 3 == ring.zero
    assert x ** 2 != ring.zero
    assert ring.is_unit(x) is None
    inv = ring.is_unit(1 + 2 * x + ring.zero)
    assert inv * (1 + 2 * x) == ring.one


def test_rational_inverse():
    q = RationalRing()
    a = parse_element(q, "2/3")
    assert a.rep == Fraction(2, 3)
    assert q.is_unit(a) == parse_element(q, "3/2")
    assert q.is_unit(q.zero) is None


def test_integer_units():
    z = IntegerRing()
    assert z.is_unit(z.from_integer(-1)) == z.from_integer(-1)
    assert z.is_unit(z.from_integer(2)) is None


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatchError):
        ModularRing(6).one + RationalRing().one


@pytest.mark.parametrize("spec,description,char", [
    ("Z", "Z", 0),
    ("Q", "Q", 0),
    ("Z/6", "Z/6", 6),
    ("F5", "Z/5", 5),
    ("F5[x]/x^3", "F5[x]/x^3", 5),
    ("Z[x]/x^2", "Z[x]/x^2", 0),
    ("Z[L]", "Z[L]", 0),
])
def test_parse_ring(spec, description, char):
    ring = parse_ring(spec)
    assert ring.description == description
    assert ring.characteristic == char


@pytest.mark.parametrize("spec", ["", "Z/1", "Z/x", "F4", "F5[x]/x^0", "R", "Z[L][x]/x^2"])
def test_parse_ring_rejects(spec):
    with pytest.raises(RingParseError):
        parse_ring(spec)


def test_poly_quotient_rejects_zl_base():
    with pytest.raises((ValueError, TypeError)):
        make_poly_quotient(SymbolicLambdaRing(), 2)


@pytest.mark.parametrize("spec,text,expected", [
    ("Z", "2*(3-5)", "-4"),
    ("Z/6", "7", "1"),
    ("Z/7", "1/2", "4"),
    ("Q", "-2/3 + 1", "1/3"),
    ("F5[x]/x^3", "x^2+3", "x^2 + 3"),
    ("Z[L]", "L^2 + 2*L", "L^2 + 2*L"),
])
def test_parse_element(spec, text, expected):
    assert str(parse_element(parse_ring(spec), text)) == expected


def test_parse_element_reports_column():
    with pytest.raises(RingParseError, match="column 3"):
        parse_element(parse_ring("Z/6"), "1/2")
    with pytest.raises(RingParseError):
        parse_element(parse_ring("Z"), "x")
    with pytest.raises(RingParseError):
        parse_element(parse_ring("Z"), "2 +")


@pytest.mark.parametrize("spec,c", [("Z/6", "4"), ("F5[x]/x^3", "2*x + 1"), ("Q", "2/3"),
                                    ("Z[x]/x^2", "x")])
@given(p=st.lists(small, max_size=5), q=st.lists(small, max_size=5))
def test_specialize_is_homomorphism(spec, c, p, q):
    zl = SymbolicLambdaRing()
    target = parse_ring(spec)
    cv = parse_element(target, c)
    f, g = build(zl, p), build(zl, q)
    assert specialize(f + g, cv, target) == specialize(f, cv, target) + specialize(g, cv, target)
    assert specialize(f * g, cv, target) == specialize(f, cv, target) * specialize(g, cv, target)
    assert specialize(zl.generator, cv, target) == cv


def test_symbolic_ring_shape():
    zl = SymbolicLambdaRing()
    L = zl.generator
    p = (L + 1) ** 3
    assert zl.coefficients(p) == (1, 3, 3, 1)
    assert zl.degree(p) == 3
    assert zl.degree(zl.zero) < 0
    assert zl.is_unit(L) is None
    assert zl.is_unit(zl.from_integer(-1)) == zl.from_integer(-1)


def test_elements_are_hashable_and_canonical():
    ring = PolyQuotientRing(ModularRing(5), 3)
    x = ring.generator
    assert hash(x * 5 + 1) == hash(ring.one)
    assert len({x, x + 0, 6 * x - 5 * x}) == 1
