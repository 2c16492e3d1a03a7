import pytest

from lambda_hopf import iso
from lambda_hopf.hopf import DegreeBoundError, HopfContext, make_context
from lambda_hopf.iso import IsoError, build_scaling_iso, check_hopf_morphism, check_round_trip
from lambda_hopf.ring import IntegerRing, ModularRing, RationalRing, parse_element, parse_ring


def test_scaling_iso_over_integers():
    Z = IntegerRing()
    phi, inv = build_scaling_iso(Z, Z.from_integer(2), Z.from_integer(-2), Z.from_integer(-1), 6)
    for n in range(7):
        assert phi.image(n) == phi.target.basis(n, (-1) ** n)
    assert check_hopf_morphism(phi, 6).passed
    assert check_hopf_morphism(inv, 6).passed
    assert check_round_trip(phi, inv, 6).passed
    assert iso.map_obstruction(phi) == Z.from_integer(2)


def test_build_rejects_bad_inputs():
    Z = IntegerRing()
    with pytest.raises(IsoError, match="not a unit"):
        build_scaling_iso(Z, Z.from_integer(4), Z.from_integer(2), Z.from_integer(2), 3)
    with pytest.raises(IsoError):
        build_scaling_iso(Z, Z.from_integer(2), Z.from_integer(3), Z.from_integer(1), 3)


def test_diagonal_map_with_wrong_scale_fails_at_degree_one():
    Z = IntegerRing()
    src, dst = make_context(Z, 2), make_context(Z, 3)
    phi = iso.diagonal_map(src, dst, Z.one, 4)
    rep = check_hopf_morphism(phi, 4)
    assert not rep.passed
    ce = rep.counterexample
    assert ce.inputs == {"n": 1}
    assert ce.detail == "morphism_comul"
    # Delta_nu phi(a_1) - (phi (x) phi) Delta_lam(a_1) = (lam - nu) a0⊗a0
    assert ce.rhs - ce.lhs == type(ce.lhs)(dst, {(0, 0): Z.from_integer(-1)})


def test_counit_equation_is_checked():
    F = ModularRing(2)
    src, dst = make_context(F, 0), make_context(F, 0)
    phi = iso.diagonal_map(src, dst, F.one, 3)
    assert check_hopf_morphism(phi, 3).passed
    # a_1 -> 0 keeps the degree-zero equations but breaks eps(phi(a_1)) = eps(a_1) only
    # when eps(a_1) != 0, so use weight 1 on both sides
    one = make_context(F, 1)
    killer = iso.HopfMap(one, one, (one.basis(0), one.zero()))
    reports = {r.name: r.passed for r in iso.morphism_reports(killer, 1)}
    assert reports["morphism_counit"] is False
    names = [r.name for r in iso.morphism_reports(phi, 3)]
    assert names == ["morphism_comul", "morphism_mul", "morphism_antipode", "morphism_counit"]


def test_map_bound_enforced():
    Z = IntegerRing()
    phi, _ = build_scaling_iso(Z, Z.one, Z.one, Z.one, 2)
    with pytest.raises(DegreeBoundError):
        check_hopf_morphism(phi, 3)
    with pytest.raises(DegreeBoundError):
        phi.image(3)


def test_mixed_rings_rejected():
    a, b = make_context(IntegerRing(), 1), make_context(RationalRing(), 1)
    with pytest.raises(IsoError):
        iso.HopfMap(a, b, (b.basis(0),))


def test_obstruction_formula():
    Z = IntegerRing()
    nu = Z.from_integer(3)
    c = [Z.from_integer(v) for v in (1, 2, 5)]
    # 3 * (1 - 3*2 + 9*5)
    assert iso.delta_constant_obstruction(c, nu) == Z.from_integer(120)


def test_obstruction_matches_coproduct_constant_term():
    ring = parse_ring("Z/7")
    nu = ring.from_integer(3)
    ctx = make_context(ring, nu)
    c = [ring.from_integer(v) for v in (2, 5, 1)]
    x = sum((ctx.basis(i + 1, ci) for i, ci in enumerate(c)), ctx.zero())
    from lambda_hopf.hopf import comul
    assert -comul(x).coefficient((0, 0)) == iso.delta_constant_obstruction(c, nu)


def test_obstruction_needs_no_constant_term():
    Z = IntegerRing()
    ctx = make_context(Z, 1)
    phi = iso.HopfMap(ctx, ctx, (ctx.basis(0), ctx.basis(0) + ctx.basis(1)))
    with pytest.raises(IsoError):
        iso.map_obstruction(phi)


def test_p_power_examples():
    F5 = ModularRing(5)
    assert iso.p_power_leading(make_context(F5, 2), 1, 5) == F5.one
    F7 = ModularRing(7)
    assert iso.p_power_leading(make_context(F7, 0), 2, 7) == F7.zero
    F3 = ModularRing(3)
    assert iso.p_power_leading(make_context(F3, 1), 1, 3) == F3.one
    ring = parse_ring("F2[x]/x^3")
    x = ring.generator
    assert iso.p_power_leading(HopfContext(ring, x), 1, 2) == x
    with pytest.raises(ValueError):
        iso.p_power_leading(make_context(F5, 1), 0, 5)
    with pytest.raises(ValueError):
        iso.p_power_leading(make_context(F5, 1), 1, 4)


def test_nilpotent_profile():
    Q = RationalRing()
    ctx = make_context(Q, 0)
    x = ctx.basis(1)
    assert iso.nilpotent_power_profile(x, 2)[1] == ctx.basis(2, 2)
    ring = parse_ring("F2[x]/x^2")
    ctx2 = make_context(ring, 0)
    y = ctx2.basis(0, ring.generator)
    assert not iso.nilpotent_power_profile(y, 2)[1]
    with pytest.raises(ValueError):
        iso.nilpotent_power_profile(x, 0)


def test_map_json():
    ring = parse_ring("Z/5")
    phi, _ = build_scaling_iso(ring, ring.from_integer(1), ring.from_integer(2),
                               ring.from_integer(3), 2)
    assert phi.to_json() == {
        "ring": "Z/5", "source_weight": "1", "target_weight": "2", "bound": 2,
        "images": {"0": {"0": "1"}, "1": {"1": "3"}, "2": {"2": "4"}},
    }


def test_poly_quotient_iso():
    ring = parse_ring("F3[x]/x^2")
    x = ring.generator
    phi, inv = build_scaling_iso(ring, x, 2 * x, parse_element(ring, "2"), 5)
    assert check_hopf_morphism(phi, 5).passed and check_round_trip(phi, inv, 5).passed
    assert iso.map_obstruction(phi) == x
