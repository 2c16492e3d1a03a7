"""Maps between algebras of different weights over the same ring.

Constructive tools only: the diagonal scaling isomorphism when the weights
differ by a unit, a morphism checker, and the finite quantities used to rule
isomorphisms out (the degree-one coproduct constant term and the low-degree
coefficient of ``p``-th powers).  Nothing here decides ideal equality.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from . import hopf
from .axioms import CheckReport, Counterexample, merge
from .hopf import DegreeBoundError, GradedElement, HopfContext, TensorElement2
from .ring import Ring, RingElement, _is_prime


class IsoError(ValueError):
    """Inputs do not define the requested map."""


@dataclass(frozen=True)
class HopfMap:
    """A linear map ``A_source -> A_target`` given on ``a_0 .. a_bound``."""

    source: HopfContext
    target: HopfContext
    images: tuple[GradedElement, ...]

    def __post_init__(self):
        if self.source.ring != self.target.ring:
            raise IsoError("source and target must share a ring")
        for img in self.images:
            if img.ctx.ring != self.target.ring:
                raise IsoError("images must lie in the target module")

    @property
    def bound(self) -> int:
        return len(self.images) - 1

    def image(self, n: int) -> GradedElement:
        if n < 0 or n > self.bound:
            raise DegreeBoundError(f"degree {n} outside map bound {self.bound}")
        return self.images[n]

    def __call__(self, x: GradedElement) -> GradedElement:
        out = self.target.zero()
        for n, c in x.terms.items():
            out = out + self.image(n).scale(c)
        return out

    def on_tensor(self, u: TensorElement2) -> TensorElement2:
        """``(phi (x) phi)(u)``."""
        out = TensorElement2(self.target, {})
        for (i, j), c in u.terms.items():
            out = out + hopf.tensor(self.image(i), self.image(j)).scale(c)
        return out

    def compose(self, first: "HopfMap") -> "HopfMap":
        """``self ∘ first``."""
        if first.target.ring != self.source.ring or first.target.lam != self.source.lam:
            raise IsoError("maps are not composable")
        bound = first.bound
        return HopfMap(first.source, self.target,
                       tuple(self(first.image(n)) for n in range(bound + 1)))

    def to_json(self) -> dict:
        return {
            "ring": self.source.ring.description,
            "source_weight": str(self.source.lam),
            "target_weight": str(self.target.lam),
            "bound": self.bound,
            "images": {str(n): img.to_json() for n, img in enumerate(self.images)},
        }


def diagonal_map(source: HopfContext, target: HopfContext, omega: RingElement,
                 bound: int) -> HopfMap:
    """``a_{source,n} -> omega^n a_{target,n}`` with no compatibility check."""
    return HopfMap(source, target, tuple(target.basis(n, omega ** n) for n in range(bound + 1)))


def build_scaling_iso(ring: Ring, lam: RingElement, nu: RingElement, omega: RingElement,
                      bound: int) -> tuple[HopfMap, HopfMap]:
    """The isomorphism ``A_lam -> A_nu``, ``a_n -> omega^n a_n``, and its inverse.

    Requires ``omega`` to be a unit with ``lam == omega * nu``.
    """
    inv = ring.is_unit(omega)
    if inv is None:
        raise IsoError(f"omega = {omega} is not a unit of {ring.description}")
    if lam != omega * nu:
        raise IsoError(f"lam = {lam} but omega * nu = {omega * nu}")
    src, dst = HopfContext(ring, lam), HopfContext(ring, nu)
    return diagonal_map(src, dst, omega, bound), diagonal_map(dst, src, inv, bound)


def morphism_reports(phi: HopfMap, max_degree: int) -> list[CheckReport]:
    """One report per compatibility equation: coproduct, product, antipode, counit."""
    N = max_degree
    if N > phi.bound:
        raise DegreeBoundError(f"max degree {N} exceeds map bound {phi.bound}")
    src, dst = phi.source, phi.target

    def single(name, inputs, lhs, rhs):
        ok = lhs == rhs
        return CheckReport(name, dst.ring.description, {k: [v, v] for k, v in inputs.items()},
                           ok, 1, None if ok else Counterexample(inputs, lhs, rhs, name))

    comul = [single("morphism_comul", {"n": n},
                    phi.on_tensor(src.comul_basis(n)), hopf.comul(phi.image(n)))
             for n in range(N + 1)]
    mul = [single("morphism_mul", {"m": m, "n": n},
                  phi(src.basis_mul(m, n)), hopf.mul(phi.image(m), phi.image(n)))
           for m in range(N + 1) for n in range(N + 1 - m)]
    anti = [single("morphism_antipode", {"n": n},
                   phi(src.antipode_basis(n)), hopf.antipode(phi.image(n)))
            for n in range(N + 1)]
    counit = [single("morphism_counit", {"n": n},
                     hopf.counit(phi.image(n)), src.counit_basis(n))
              for n in range(N + 1)]
    return [
        merge("morphism_comul", dst, {"n": [0, N]}, comul),
        merge("morphism_mul", dst, {"m+n": f"<={N}"}, mul),
        merge("morphism_antipode", dst, {"n": [0, N]}, anti),
        merge("morphism_counit", dst, {"n": [0, N]}, counit),
    ]


def check_hopf_morphism(phi: HopfMap, max_degree: int) -> CheckReport:
    """All four compatibility equations on basis elements up to ``max_degree``.

    The first failing equation (in the order coproduct, product, antipode,
    counit) supplies the counterexample.
    """
    t = time.perf_counter()
    reports = morphism_reports(phi, max_degree)
    rep = merge("hopf_morphism", phi.target, {"n": [0, max_degree]}, reports)
    rep.elapsed = time.perf_counter() - t
    return rep


def check_round_trip(phi: HopfMap, inverse: HopfMap, max_degree: int) -> CheckReport:
    reports = []
    for first, second, label in ((phi, inverse, "inverse∘map"), (inverse, phi, "map∘inverse")):
        composite = second.compose(first)
        for n in range(max_degree + 1):
            lhs, rhs = composite.image(n), first.source.basis(n)
            ok = lhs == rhs
            reports.append(CheckReport("round_trip", lhs.ctx.ring.description, {"n": [n, n]}, ok, 1,
                                       None if ok else Counterexample({"n": n}, lhs, rhs, label)))
    return merge("round_trip", phi.source, {"n": [0, max_degree]}, reports)


# -- obstructions ----------------------------------------------------------------------


def delta_constant_obstruction(c: Sequence[RingElement], nu: RingElement) -> RingElement:
    """``nu * sum_{i>=1} (-nu)^{i-1} c_i`` for ``c = (c_1, c_2, ...)``.

    For ``x = sum_{i>=1} c_i a_{nu,i}`` this is minus the ``a_0 (x) a_0``
    coefficient of ``Delta_nu(x)``; a Hopf morphism from ``A_lam`` sending
    ``a_1`` to ``x`` forces it to equal ``lam``.
    """
    total = nu.ring.zero
    power = nu.ring.one
    for ci in c:
        total = total + power * ci
        power = power * (-nu)
    return nu * total


def first_degree_coefficients(phi: HopfMap) -> tuple[RingElement, ...]:
    """``(c_1, .., c_N)`` with ``phi(a_1) = sum c_i a_i``; requires no ``a_0`` term."""
    img = phi.image(1)
    if img.coefficient(0):
        raise IsoError("phi(a_1) has a constant term; the obstruction formula does not apply")
    top = img.degree()
    return tuple(img.coefficient(i) for i in range(1, top + 1))


def map_obstruction(phi: HopfMap) -> RingElement:
    return delta_constant_obstruction(first_degree_coefficients(phi), phi.target.lam)


def p_power(ctx: HopfContext, k: int, p: int) -> GradedElement:
    return ctx.basis(k) ** p


def p_power_leading(ctx: HopfContext, k: int, p: int) -> RingElement:
    """Coefficient of ``a_k`` in ``a_k^p`` (computed by repeated products).

    The lowest degree in ``a_m a_n`` is ``max(m, n)``, so ``a_k`` is the lowest
    term of ``a_k^p``; its coefficient is ``nu^((p-1)k)``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    return p_power(ctx, k, p).coefficient(k)


def nilpotent_power_profile(x: GradedElement, max_power: int) -> list[GradedElement]:
    """``[x, x^2, ..., x^max_power]``."""
    if max_power < 1:
        raise ValueError("max_power must be >= 1")
    powers = [x]
    for _ in range(max_power - 1):
        powers.append(hopf.mul(powers[-1], x))
    return powers
