"""The weight-lambda divided power Hopf algebra ``A_lambda``.

``A`` is the free ``C``-module on ``a_0, a_1, ...``.  On basis elements:

* product     ``a_m a_n = sum_{k=0}^{m} lam^k binom(m+n-k, m) binom(m, k) a_{m+n-k}``
* unit        ``1 -> a_0``
* coproduct   ``a_n -> sum_{k=0}^{n} sum_{i=0}^{n-k} (-lam)^k a_i (x) a_{n-k-i}``
* counit      ``a_0 -> 1``, ``a_1 -> lam``, ``a_n -> 0`` for ``n >= 2``
* antipode    ``a_n -> (-1)^n sum_{v=0}^{n} binom(n-3, v-3) lam^(n-v) a_v``
* Baxter op.  ``P(a_n) = a_{n+1}``

Every image is finitely supported, so elements are stored exactly as sparse
dicts with no zero coefficients, and equality is structural.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

from .binomial import binom
from .ring import Ring, RingElement, RingMismatchError, SymbolicLambdaRing, specialize


class DegreeBoundError(IndexError):
    """A linear map was asked for an image beyond its stored degree bound."""


Scalar = Union[RingElement, int]


@dataclass(frozen=True)
class HopfContext:
    """A ring ``C`` with a weight ``lam``; fixes one algebra ``A_lam``.

    The ``basis_*`` methods return memoised structure constants.  Subclasses
    may override the ``_compute_*`` hooks (used to inject mutations).
    ``antipode_rule`` is the binomial used in the antipode formula.
    """

    ring: Ring
    lam: RingElement
    antipode_rule: Callable[[int, int], int] = binom
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.lam, RingElement):
            raise TypeError("lam must be a RingElement")
        if self.lam.ring != self.ring:
            raise RingMismatchError(
                f"weight {self.lam} lives in {self.lam.ring.description}, not {self.ring.description}"
            )

    # -- helpers -------------------------------------------------------------

    def scalar(self, c: Scalar) -> RingElement:
        if isinstance(c, int):
            return self.ring.from_integer(c)
        if c.ring != self.ring:
            raise RingMismatchError(f"{c!r} is not in {self.ring.description}")
        return c

    def lam_power(self, k: int) -> RingElement:
        powers = self._cache.setdefault("lam_pow", [self.ring.one])
        while len(powers) <= k:
            powers.append(powers[-1] * self.lam)
        return powers[k]

    def basis(self, n: int, coefficient: Scalar = 1) -> "GradedElement":
        if n < 0:
            raise ValueError(f"degree must be nonnegative, got {n}")
        return GradedElement(self, {n: self.scalar(coefficient)})

    def zero(self) -> "GradedElement":
        return GradedElement(self, {})

    def _memo(self, name: str, key, compute):
        table = self._cache.setdefault(name, {})
        try:
            return table[key]
        except KeyError:
            value = table[key] = compute()
            return value

    # -- structure constants -------------------------------------------------

    def unit_element(self) -> "GradedElement":
        return self._memo("unit", None, self._compute_unit)

    def basis_mul(self, m: int, n: int) -> "GradedElement":
        return self._memo("mul", (m, n), lambda: self._compute_mul(m, n))

    def comul_basis(self, n: int) -> "TensorElement2":
        return self._memo("comul", n, lambda: self._compute_comul(n))

    def counit_basis(self, n: int) -> RingElement:
        return self._memo("counit", n, lambda: self._compute_counit(n))

    def antipode_basis(self, n: int) -> "GradedElement":
        return self._memo("antipode", n, lambda: self._compute_antipode(n))

    def shift_basis(self, n: int) -> "GradedElement":
        return self._memo("shift", n, lambda: self._compute_shift(n))

    def _compute_unit(self):
        return self.basis(0)

    def _compute_mul(self, m, n):
        if m < 0 or n < 0:
            raise ValueError("degrees must be nonnegative")
        terms = {}
        from_int = self.ring.from_integer
        for k in range(m + 1):
            c = binom(m + n - k, m) * binom(m, k)
            if c:
                terms[m + n - k] = from_int(c) * self.lam_power(k)
        return GradedElement(self, terms)

    def _compute_comul(self, n):
        if n < 0:
            raise ValueError("degree must be nonnegative")
        terms = {}
        for k in range(n + 1):
            c = self.lam_power(k)
            if k & 1:
                c = -c
            for i in range(n - k + 1):
                terms[(i, n - k - i)] = c
        return TensorElement2(self, terms)

    def _compute_counit(self, n):
        if n == 0:
            return self.ring.one
        if n == 1:
            return self.lam
        return self.ring.zero

    def _compute_antipode(self, n):
        if n < 0:
            raise ValueError("degree must be nonnegative")
        from_int = self.ring.from_integer
        sign = -1 if n & 1 else 1
        terms = {}
        for v in range(n + 1):
            c = self.antipode_rule(n - 3, v - 3)
            if c:
                terms[v] = from_int(sign * c) * self.lam_power(n - v)
        return GradedElement(self, terms)

    def _compute_shift(self, n):
        return self.basis(n + 1)


def make_context(ring: Ring, lam: Scalar = 0, **kwargs) -> HopfContext:
    lam = ring.from_integer(lam) if isinstance(lam, int) else lam
    return HopfContext(ring, lam, **kwargs)


def symbolic_context(**kwargs) -> HopfContext:
    """``A_L`` over ``Z[L]`` with the formal weight ``L``."""
    ring = SymbolicLambdaRing()
    return HopfContext(ring, ring.generator, **kwargs)


# -- sparse elements -------------------------------------------------------------


_SIMPLE = re.compile(r"-?[^\s+\-]+")


def _format_terms(items: Iterable[tuple[str, RingElement]]) -> str:
    pieces: list[str] = []
    for basis_text, coef in items:
        text = str(coef)
        negative = False
        if text.startswith("-") and _SIMPLE.fullmatch(text):
            negative, text = True, text[1:]
        if text == "1":
            body = basis_text
        elif _SIMPLE.fullmatch(text):
            body = f"{text}*{basis_text}"
        else:
            body = f"({text})*{basis_text}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0"


class _Sparse:
    """Finitely supported linear combination, keyed by degree tuples or ints."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: HopfContext, terms: dict):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def _raw(cls, ctx, terms):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        return obj

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.ctx.ring != self.ctx.ring:
            raise RingMismatchError("elements live over different rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._raw(self.ctx, out)

    def __neg__(self):
        return self._raw(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar):
        c = self.ctx.scalar(c)
        return type(self)(self.ctx, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (RingElement, int)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return other.ctx.ring == self.ctx.ring and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, key) -> RingElement:
        return self.terms.get(key, self.ctx.ring.zero)

    def support(self) -> list:
        return sorted(self.terms)

    def _key_text(self, key) -> str:
        raise NotImplementedError

    def render(self, key=None) -> str:
        """Text form; ``key`` orders the terms (default: ascending index)."""
        order = sorted(self.terms, key=key)
        return _format_terms((self._key_text(k), self.terms[k]) for k in order)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"{type(self).__name__}({self.render()})"

    def map_coefficients(self, ctx: HopfContext, fn: Callable[[RingElement], RingElement]):
        """Same support, coefficients sent through ``fn`` into ``ctx``."""
        return type(self)(ctx, {k: fn(v) for k, v in self.terms.items()})


class GradedElement(_Sparse):
    """An element ``sum c_n a_n`` of ``A``."""

    __slots__ = ()

    def __init__(self, ctx, terms):
        super().__init__(ctx, terms)
        if any((not isinstance(k, int)) or k < 0 for k in self.terms):
            raise ValueError("degrees must be nonnegative integers")

    def _key_text(self, key):
        return f"a{key}"

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            return mul(self, other)
        if isinstance(other, (RingElement, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 1:
            raise ValueError("power must be >= 1")
        result = self
        for _ in range(k - 1):
            result = mul(result, self)
        return result

    def degree(self) -> int:
        """Largest degree in the support; ``-1`` for zero."""
        return max(self.terms, default=-1)

    def to_json(self) -> dict[str, str]:
        return {str(k): str(self.terms[k]) for k in sorted(self.terms)}


class TensorElement2(_Sparse):
    """An element of ``A (x) A`` keyed by ``(i, j)``."""

    __slots__ = ()

    def _key_text(self, key):
        return f"a{key[0]}⊗a{key[1]}"

    def __mul__(self, other):
        if isinstance(other, TensorElement2):
            return mul2(self, other)
        if isinstance(other, (RingElement, int)):
            return self.scale(other)
        return NotImplemented

    def to_json(self) -> dict[str, str]:
        return {f"{i},{j}": str(self.terms[(i, j)]) for i, j in sorted(self.terms)}


class TensorElement3(_Sparse):
    """An element of ``A (x) A (x) A`` keyed by ``(i, j, k)``."""

    __slots__ = ()

    def _key_text(self, key):
        return "⊗".join(f"a{i}" for i in key)

    def __mul__(self, other):
        if isinstance(other, (RingElement, int)):
            return self.scale(other)
        return NotImplemented

    def to_json(self) -> dict[str, str]:
        return {",".join(map(str, k)): str(self.terms[k]) for k in sorted(self.terms)}


def _accumulate(out: dict, key, value: RingElement) -> None:
    s = out.get(key)
    out[key] = value if s is None else s + value


def _clean(out: dict) -> dict:
    return {k: v for k, v in out.items() if v}


# -- structure maps ----------------------------------------------------------------


def unit(ctx: HopfContext) -> GradedElement:
    return ctx.unit_element()


def basis_mul(ctx: HopfContext, m: int, n: int) -> GradedElement:
    return ctx.basis_mul(m, n)


def mul(x: GradedElement, y: GradedElement) -> GradedElement:
    x._check(y)
    ctx = x.ctx
    out: dict = {}
    for m, cm in x.terms.items():
        for n, cn in y.terms.items():
            c = cm * cn
            for d, v in ctx.basis_mul(m, n).terms.items():
                _accumulate(out, d, c * v)
    return GradedElement._raw(ctx, _clean(out))


def mul2(u: TensorElement2, v: TensorElement2) -> TensorElement2:
    """Legwise product ``(x (x) y)(x' (x) y') = x x' (x) y y'``."""
    u._check(v)
    ctx = u.ctx
    out: dict = {}
    for (i, j), cu in u.terms.items():
        for (k, l), cv in v.terms.items():
            c = cu * cv
            left = ctx.basis_mul(i, k).terms
            right = ctx.basis_mul(j, l).terms
            for p, lp in left.items():
                clp = c * lp
                for q, rq in right.items():
                    _accumulate(out, (p, q), clp * rq)
    return TensorElement2._raw(ctx, _clean(out))


def mu(u: TensorElement2) -> GradedElement:
    """The product map ``A (x) A -> A``."""
    ctx = u.ctx
    out: dict = {}
    for (i, j), c in u.terms.items():
        for d, v in ctx.basis_mul(i, j).terms.items():
            _accumulate(out, d, c * v)
    return GradedElement._raw(ctx, _clean(out))


def tensor(x: GradedElement, y: GradedElement) -> TensorElement2:
    x._check(y)
    out = {(i, j): ci * cj for i, ci in x.terms.items() for j, cj in y.terms.items()}
    return TensorElement2(x.ctx, out)


def comul_basis(ctx: HopfContext, n: int) -> TensorElement2:
    return ctx.comul_basis(n)


def comul(x: GradedElement) -> TensorElement2:
    ctx = x.ctx
    out: dict = {}
    for n, c in x.terms.items():
        for key, v in ctx.comul_basis(n).terms.items():
            _accumulate(out, key, c * v)
    return TensorElement2._raw(ctx, _clean(out))


def counit(x: GradedElement) -> RingElement:
    ctx = x.ctx
    total = ctx.ring.zero
    for n, c in x.terms.items():
        total = total + c * ctx.counit_basis(n)
    return total


def antipode_basis(ctx: HopfContext, n: int) -> GradedElement:
    return ctx.antipode_basis(n)


def antipode(x: GradedElement) -> GradedElement:
    ctx = x.ctx
    out: dict = {}
    for n, c in x.terms.items():
        for d, v in ctx.antipode_basis(n).terms.items():
            _accumulate(out, d, c * v)
    return GradedElement._raw(ctx, _clean(out))


def baxter_P(x: GradedElement) -> GradedElement:
    """The Baxter operator ``a_n -> a_{n+1}``, extended linearly."""
    ctx = x.ctx
    out: dict = {}
    for n, c in x.terms.items():
        for d, v in ctx.shift_basis(n).terms.items():
            _accumulate(out, d, c * v)
    return GradedElement._raw(ctx, _clean(out))


def flip(u: TensorElement2) -> TensorElement2:
    return TensorElement2._raw(u.ctx, {(j, i): c for (i, j), c in u.terms.items()})


def comul_left(u: TensorElement2) -> TensorElement3:
    """``(Delta (x) id)(u)``."""
    ctx = u.ctx
    out: dict = {}
    for (i, j), c in u.terms.items():
        for (p, q), v in ctx.comul_basis(i).terms.items():
            _accumulate(out, (p, q, j), c * v)
    return TensorElement3._raw(ctx, _clean(out))


def comul_right(u: TensorElement2) -> TensorElement3:
    """``(id (x) Delta)(u)``."""
    ctx = u.ctx
    out: dict = {}
    for (i, j), c in u.terms.items():
        for (p, q), v in ctx.comul_basis(j).terms.items():
            _accumulate(out, (i, p, q), c * v)
    return TensorElement3._raw(ctx, _clean(out))


def counit_left(u: TensorElement2) -> GradedElement:
    """``(eps (x) id)(u)`` with the ``C`` leg folded into the coefficient."""
    ctx = u.ctx
    out: dict = {}
    for (i, j), c in u.terms.items():
        e = ctx.counit_basis(i)
        if e:
            _accumulate(out, j, c * e)
    return GradedElement._raw(ctx, _clean(out))


def counit_right(u: TensorElement2) -> GradedElement:
    """``(id (x) eps)(u)``."""
    ctx = u.ctx
    out: dict = {}
    for (i, j), c in u.terms.items():
        e = ctx.counit_basis(j)
        if e:
            _accumulate(out, i, c * e)
    return GradedElement._raw(ctx, _clean(out))


# -- linear endomorphisms and convolution --------------------------------------------


@dataclass(frozen=True)
class LinearEndo:
    """A linear map ``A -> A`` given by its images of ``a_0 .. a_bound``."""

    ctx: HopfContext
    images: tuple[GradedElement, ...]
    name: str = "f"

    @property
    def bound(self) -> int:
        return len(self.images) - 1

    def image(self, n: int) -> GradedElement:
        if n < 0 or n > self.bound:
            raise DegreeBoundError(f"{self.name}: degree {n} outside stored bound {self.bound}")
        return self.images[n]

    def __call__(self, x: GradedElement) -> GradedElement:
        out = x.ctx.zero()
        for n, c in x.terms.items():
            out = out + self.image(n).scale(c)
        return out


def endo_from(ctx: HopfContext, fn: Callable[[int], GradedElement], bound: int,
              name: str = "f") -> LinearEndo:
    return LinearEndo(ctx, tuple(fn(n) for n in range(bound + 1)), name)


def eta_eps(ctx: HopfContext, bound: int) -> LinearEndo:
    return endo_from(ctx, lambda n: ctx.unit_element().scale(ctx.counit_basis(n)), bound, "eta∘eps")


def identity_endo(ctx: HopfContext, bound: int) -> LinearEndo:
    return endo_from(ctx, ctx.basis, bound, "id")


def antipode_endo(ctx: HopfContext, bound: int) -> LinearEndo:
    return endo_from(ctx, ctx.antipode_basis, bound, "S")


def apply_legs(f: LinearEndo, g: LinearEndo, u: TensorElement2) -> TensorElement2:
    """``(f (x) g)(u)``."""
    ctx = u.ctx
    out: dict = {}
    for (i, j), c in u.terms.items():
        fi, gj = f.image(i).terms, g.image(j).terms
        for p, cp in fi.items():
            ccp = c * cp
            for q, cq in gj.items():
                _accumulate(out, (p, q), ccp * cq)
    return TensorElement2._raw(ctx, _clean(out))


def convolution(f: LinearEndo, g: LinearEndo, n: int) -> GradedElement:
    """``(f * g)(a_n) = mu (f (x) g) Delta (a_n)``."""
    limit = min(f.bound, g.bound)
    if n > limit:
        raise DegreeBoundError(f"degree {n} exceeds convolution bound {limit}")
    return mu(apply_legs(f, g, f.ctx.comul_basis(n)))


def solve_antipode(ctx: HopfContext, bound: int) -> list[GradedElement]:
    """Left convolution inverse of ``id``, solved degree by degree.

    The ``a_n (x) a_0`` term of ``Delta(a_n)`` has coefficient 1 and every other
    term has left degree below ``n``, so
    ``S(a_n) = eps(a_n) a_0 - sum_{(i,j) != (n,0)} c_ij S(a_i) a_j``.
    Independent of the closed-form antipode.
    """
    solved: list[GradedElement] = []
    for n in range(bound + 1):
        acc = ctx.basis(0, ctx.counit_basis(n))
        for (i, j), c in ctx.comul_basis(n).terms.items():
            if (i, j) == (n, 0):
                continue
            acc = acc - mul(solved[i], ctx.basis(j)).scale(c)
        solved.append(acc)
    return solved


def specialize_element(x: _Sparse, target: HopfContext) -> _Sparse:
    """Map a ``Z[L]`` element into ``target`` by setting ``L`` to its weight."""
    if not isinstance(x.ctx.ring, SymbolicLambdaRing):
        raise RingMismatchError("specialize_element expects an element over Z[L]")
    return x.map_coefficients(target, lambda c: specialize(c, target.lam, target.ring))
