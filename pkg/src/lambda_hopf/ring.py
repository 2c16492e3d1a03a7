"""Commutative rings with identity, with exact arithmetic.

A :class:`Ring` works on raw representations (``int``, ``Fraction``, tuples of
coefficients) and hands out :class:`RingElement` wrappers that remember which
ring they belong to.  Rings are frozen dataclasses, so two separately built
``ModularRing(6)`` instances are the same ring.

Supported carriers::

    Z            IntegerRing()
    Q            RationalRing()
    Z/n          ModularRing(n)
    Z[L]         SymbolicLambdaRing()       integer polynomials in a formal weight L
    Fp[x]/x^r    PolyQuotientRing(ModularRing(p), r)
    Z[x]/x^r     PolyQuotientRing(IntegerRing(), r)
"""

from __future__ import annotations

import ast
import math
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional


class RingMismatchError(TypeError):
    """Raised when two values from different rings are combined."""


class RingParseError(ValueError):
    """Raised for malformed ring specs or element expressions.

    ``position`` is the 0-based column of the offending character, when known.
    """

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at column {position + 1} of {text!r})"
        super().__init__(message)


class RingElement:
    """An immutable value in a specific ring."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: "Ring", rep: Any):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def __reduce__(self):
        return (RingElement, (self.ring, self.rep))

    def _coerce(self, other) -> Any:
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine {self.ring.description} with {other.ring.description}"
                )
            return other.rep
        if isinstance(other, int):
            return self.ring._from_int(other)
        return NotImplemented

    def __add__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._add(self.rep, rep))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.rep))

    def __sub__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._add(self.rep, self.ring._neg(rep)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._mul(self.rep, rep))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = self.ring._from_int(1)
        base = self.rep
        while k:
            if k & 1:
                result = self.ring._mul(result, base)
            k >>= 1
            if k:
                base = self.ring._mul(base, base)
        return RingElement(self.ring, result)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                return False
            return self.rep == other.rep
        if isinstance(other, int):
            return self.rep == self.ring._from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.rep)

    def __bool__(self):
        return not self.ring._is_zero(self.rep)

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.rep)

    def inverse(self) -> Optional["RingElement"]:
        return self.ring.is_unit(self)

    def __str__(self):
        return self.ring._render(self.rep)

    def __repr__(self):
        return f"RingElement({self.ring.description}: {self.ring._render(self.rep)})"


class Ring(ABC):
    """A commutative ring with identity.

    Subclasses implement the underscore methods on raw representations; the
    public methods wrap and unwrap :class:`RingElement` values.
    """

    # -- raw-representation hooks ------------------------------------------------

    @abstractmethod
    def _from_int(self, k: int) -> Any: ...

    @abstractmethod
    def _add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def _neg(self, a: Any) -> Any: ...

    @abstractmethod
    def _mul(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def _inverse(self, a: Any) -> Optional[Any]: ...

    @abstractmethod
    def _render(self, a: Any) -> str: ...

    def _is_zero(self, a: Any) -> bool:
        return a == self._from_int(0)

    @property
    @abstractmethod
    def characteristic(self) -> int: ...

    @property
    @abstractmethod
    def description(self) -> str: ...

    def symbols(self) -> dict[str, RingElement]:
        """Named generators usable in element expressions (e.g. ``L`` or ``x``)."""
        return {}

    # -- public interface --------------------------------------------------------

    def element(self, rep: Any) -> RingElement:
        return RingElement(self, rep)

    @property
    def zero(self) -> RingElement:
        return RingElement(self, self._from_int(0))

    @property
    def one(self) -> RingElement:
        return RingElement(self, self._from_int(1))

    def from_integer(self, k: int) -> RingElement:
        return RingElement(self, self._from_int(k))

    def _own(self, a: RingElement) -> Any:
        if not isinstance(a, RingElement):
            raise TypeError(f"expected a RingElement, got {type(a).__name__}")
        if a.ring is not self and a.ring != self:
            raise RingMismatchError(f"{a!r} does not belong to {self.description}")
        return a.rep

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        return RingElement(self, self._add(self._own(a), self._own(b)))

    def negate(self, a: RingElement) -> RingElement:
        return RingElement(self, self._neg(self._own(a)))

    def multiply(self, a: RingElement, b: RingElement) -> RingElement:
        return RingElement(self, self._mul(self._own(a), self._own(b)))

    def equals(self, a: RingElement, b: RingElement) -> bool:
        return self._own(a) == self._own(b)

    def is_unit(self, a: RingElement) -> Optional[RingElement]:
        """Return the inverse of ``a`` if it is a unit, else ``None``."""
        inv = self._inverse(self._own(a))
        return None if inv is None else RingElement(self, inv)

    def parse(self, text: str) -> RingElement:
        return parse_element(self, text)

    def __str__(self):
        return self.description


# -- concrete rings --------------------------------------------------------------


@dataclass(frozen=True)
class IntegerRing(Ring):
    """The integers, arbitrary precision."""

    def _from_int(self, k):
        return int(k)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inverse(self, a):
        return a if a in (1, -1) else None

    def _render(self, a):
        return str(a)

    def _is_zero(self, a):
        return a == 0

    @property
    def characteristic(self):
        return 0

    @property
    def description(self):
        return "Z"


@dataclass(frozen=True)
class RationalRing(Ring):
    """The rationals; ``Fraction`` keeps lowest terms with positive denominator."""

    def _from_int(self, k):
        return Fraction(k)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inverse(self, a):
        return None if a == 0 else 1 / a

    def _render(self, a):
        return str(a)

    def _is_zero(self, a):
        return a == 0

    @property
    def characteristic(self):
        return 0

    @property
    def description(self):
        return "Q"


@dataclass(frozen=True)
class ModularRing(Ring):
    """Residues modulo ``n``, stored in ``range(n)``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.n!r}")

    def _from_int(self, k):
        return k % self.n

    def _add(self, a, b):
        return (a + b) % self.n

    def _neg(self, a):
        return -a % self.n

    def _mul(self, a, b):
        return a * b % self.n

    def _inverse(self, a):
        if math.gcd(a, self.n) != 1:
            return None
        return pow(a, -1, self.n)

    def _render(self, a):
        return str(a)

    def _is_zero(self, a):
        return a == 0

    @property
    def characteristic(self):
        return self.n

    @property
    def description(self):
        return f"Z/{self.n}"


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _render_poly(terms: list[tuple[int, str]], var: str) -> str:
    """Render ``[(power, coefficient_text), ...]`` highest power first."""
    if not terms:
        return "0"
    pieces: list[str] = []
    for power, coef in sorted(terms, key=lambda t: -t[0]):
        negative = coef.startswith("-")
        mag = coef[1:] if negative else coef
        if power == 0:
            body = mag
        else:
            mono = var if power == 1 else f"{var}^{power}"
            if mag == "1":
                body = mono
            elif re.fullmatch(r"[0-9/]+", mag):
                body = f"{mag}*{mono}"
            else:
                body = f"({mag})*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


@dataclass(frozen=True)
class SymbolicLambdaRing(Ring):
    """Integer polynomials in a formal indeterminate ``L``.

    Values are coefficient tuples, constant term first, with no trailing zeros.
    One check over this ring certifies every specialisation of the weight.
    """

    def _from_int(self, k):
        return (int(k),) if k else ()

    def _add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return _trim(out)

    def _neg(self, a):
        return tuple(-c for c in a)

    def _mul(self, a, b):
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim(out)

    def _inverse(self, a):
        return a if a in ((1,), (-1,)) else None

    def _render(self, a):
        return _render_poly([(i, str(c)) for i, c in enumerate(a) if c], "L")

    def _is_zero(self, a):
        return not a

    @property
    def characteristic(self):
        return 0

    @property
    def description(self):
        return "Z[L]"

    def symbols(self):
        return {"L": self.generator}

    @property
    def generator(self) -> RingElement:
        return RingElement(self, (0, 1))

    def coefficients(self, a: RingElement) -> tuple[int, ...]:
        return self._own(a)

    def degree(self, a: RingElement) -> int:
        """Polynomial degree; ``-1`` for zero."""
        return len(self._own(a)) - 1


@dataclass(frozen=True)
class PolyQuotientRing(Ring):
    """Truncated polynomials ``base[x]/(x^r)``, stored as length-``r`` tuples."""

    base: Ring
    r: int

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"truncation order must be an integer >= 1, got {self.r!r}")
        if isinstance(self.base, (PolyQuotientRing, SymbolicLambdaRing)):
            raise ValueError("base ring must be Z, Q or Z/n")

    def _from_int(self, k):
        b = self.base
        return (b._from_int(k),) + (b._from_int(0),) * (self.r - 1)

    def _add(self, a, b):
        return tuple(self.base._add(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(self.base._neg(x) for x in a)

    def _mul(self, a, b):
        base = self.base
        out = [base._from_int(0)] * self.r
        for i, x in enumerate(a):
            if base._is_zero(x):
                continue
            for j in range(self.r - i):
                y = b[j]
                if not base._is_zero(y):
                    out[i + j] = base._add(out[i + j], base._mul(x, y))
        return tuple(out)

    def _inverse(self, a):
        # power-series inversion; a unit iff the constant term is
        base = self.base
        c0 = base._inverse(a[0])
        if c0 is None:
            return None
        inv = [c0] + [base._from_int(0)] * (self.r - 1)
        for k in range(1, self.r):
            acc = base._from_int(0)
            for i in range(1, k + 1):
                acc = base._add(acc, base._mul(a[i], inv[k - i]))
            inv[k] = base._neg(base._mul(c0, acc))
        return tuple(inv)

    def _render(self, a):
        base = self.base
        return _render_poly(
            [(i, base._render(c)) for i, c in enumerate(a) if not base._is_zero(c)], "x"
        )

    def _is_zero(self, a):
        return all(self.base._is_zero(c) for c in a)

    @property
    def characteristic(self):
        return self.base.characteristic

    @property
    def description(self):
        b = self.base
        prefix = f"F{b.n}" if isinstance(b, ModularRing) and _is_prime(b.n) else b.description
        return f"{prefix}[x]/x^{self.r}"

    def symbols(self):
        return {"x": self.generator}

    @property
    def generator(self) -> RingElement:
        """The class of ``x`` (zero when ``r == 1``)."""
        b = self.base
        rep = [b._from_int(0)] * self.r
        if self.r > 1:
            rep[1] = b._from_int(1)
        return RingElement(self, tuple(rep))


# -- constructors --------------------------------------------------------------


def make_integer_ring() -> IntegerRing:
    return IntegerRing()


def make_rational_ring() -> RationalRing:
    return RationalRing()


def make_modular_ring(n: int) -> ModularRing:
    return ModularRing(n)


def make_poly_quotient(base: Ring, r: int) -> PolyQuotientRing:
    return PolyQuotientRing(base, r)


def make_symbolic_lambda() -> SymbolicLambdaRing:
    return SymbolicLambdaRing()


def specialize(p: RingElement, c: RingElement, target: Ring) -> RingElement:
    """Evaluate a ``Z[L]`` polynomial at ``L = c`` in ``target`` (Horner)."""
    if not isinstance(p.ring, SymbolicLambdaRing):
        raise RingMismatchError(f"specialize expects a Z[L] value, got {p.ring.description}")
    c_rep = target._own(c)
    acc = target._from_int(0)
    for coef in reversed(p.rep):
        acc = target._add(target._mul(acc, c_rep), target._from_int(coef))
    return RingElement(target, acc)


# -- parsing -------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


_RING_PATTERNS = [
    (re.compile(r"Z"), lambda m: IntegerRing()),
    (re.compile(r"Q"), lambda m: RationalRing()),
    (re.compile(r"Z\[L\]"), lambda m: SymbolicLambdaRing()),
    (re.compile(r"Z/(\d+)"), lambda m: ModularRing(int(m[1]))),
    (re.compile(r"F(\d+)"), lambda m: ModularRing(_prime(m[1]))),
    (re.compile(r"F(\d+)\[x\]/\(?x\^(\d+)\)?"),
     lambda m: PolyQuotientRing(ModularRing(_prime(m[1])), int(m[2]))),
    (re.compile(r"Z/(\d+)\[x\]/\(?x\^(\d+)\)?"),
     lambda m: PolyQuotientRing(ModularRing(int(m[1])), int(m[2]))),
    (re.compile(r"Z\[x\]/\(?x\^(\d+)\)?"), lambda m: PolyQuotientRing(IntegerRing(), int(m[1]))),
    (re.compile(r"Q\[x\]/\(?x\^(\d+)\)?"), lambda m: PolyQuotientRing(RationalRing(), int(m[1]))),
]


def _prime(text: str) -> int:
    p = int(text)
    if not _is_prime(p):
        raise ValueError(f"F{p}: {p} is not prime")
    return p


def parse_ring(spec: str) -> Ring:
    """Parse a ring name such as ``"Z/6"``, ``"F5[x]/x^3"`` or ``"Z[L]"``."""
    text = spec.strip().replace(" ", "")
    for pattern, build in _RING_PATTERNS:
        m = pattern.fullmatch(text)
        if m:
            try:
                return build(m)
            except ValueError as exc:
                raise RingParseError(str(exc), spec) from None
    raise RingParseError(
        "unknown ring; expected Z, Q, Z/n, Fp, Z[L], Fp[x]/x^r, Z[x]/x^r or Q[x]/x^r",
        spec,
        0,
    )


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def parse_element(ring: Ring, text: str) -> RingElement:
    """Parse an arithmetic expression into ``ring``.

    Grammar: integers, ``+ - * /``, ``^`` (or ``**``) with a nonnegative integer
    exponent, parentheses, and the ring's generator symbol (``L`` in ``Z[L]``,
    ``x`` in truncated polynomial rings).  Division requires a unit divisor.
    """
    source = text.replace("^", "**")
    try:
        tree = ast.parse(source.strip(), mode="eval")
    except SyntaxError as exc:
        pos = (exc.offset - 1) if exc.offset else None
        raise RingParseError(f"syntax error: {exc.msg}", text, pos) from None
    symbols = ring.symbols()

    def col(node) -> Optional[int]:
        return getattr(node, "col_offset", None)

    def ev(node) -> RingElement:
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return ring.from_integer(node.value)
        if isinstance(node, ast.Name):
            if node.id in symbols:
                return symbols[node.id]
            raise RingParseError(f"unknown symbol {node.id!r} for ring {ring.description}",
                                 text, col(node))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0):
                    raise RingParseError("exponent must be a nonnegative integer literal",
                                         text, col(exp))
                return ev(node.left) ** exp.value
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            inv = ring.is_unit(right)
            if inv is None:
                raise RingParseError(f"divisor {right} is not a unit in {ring.description}",
                                     text, col(node.right))
            return left * inv
        raise RingParseError("unsupported expression", text, col(node))

    return ev(tree.body)
