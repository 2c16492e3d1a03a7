"""Brute-force evaluators for the binomial identities behind the Hopf proofs.

Every sum is evaluated term by term in exact arithmetic; nothing is simplified
symbolically.  Evaluators take a ``rule`` argument (a binomial function) so a
corrupted rule can be injected to confirm the sweeps detect it.

Binomial conventions: sums that descend from the antipode formula
(``id11_*``) need the symmetric extension :func:`~lambda_hopf.binomial.binom`.
The ``L``/``R`` pair comes out of telescoping ``sum_{d<=j} (-1)^d binom(a, d)``
where an empty range must give zero, so it uses
:func:`~lambda_hopf.binomial.binom_classical`.  The remaining sums only see
nonnegative upper indices, where the two rules coincide.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, fields
from typing import Any, Callable, Iterable, Optional

from .binomial import binom, binom_classical
from .axioms import format_ranges
from .hopf import HopfContext, TensorElement2

Rule = Callable[[int, int], int]


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


# -- counit lemma ---------------------------------------------------------------


def cu2_sum(ctx: HopfContext, n: int, ell: int):
    """``sum_{k=0}^{n-ell} (-lam)^k eps(a_{n-ell-k})`` in ``ctx.ring``."""
    if not 0 <= ell <= n:
        raise ValueError(f"need 0 <= ell <= n, got n={n}, ell={ell}")
    total = ctx.ring.zero
    for k in range(n - ell + 1):
        term = ctx.lam_power(k) * ctx.counit_basis(n - ell - k)
        total = total + (-term if k & 1 else term)
    return total


def verify_cu2(ctx: HopfContext, n: int, ell: int) -> bool:
    expected = ctx.ring.one if ell == n else ctx.ring.zero
    return cu2_sum(ctx, n, ell) == expected


# -- the four-index identity ------------------------------------------------------


def _check_id1_args(m, n, b, e):
    if min(m, n, b, e) < 0 or b + e > m + n:
        raise ValueError(f"need m,n,b,e >= 0 and b+e <= m+n, got {(m, n, b, e)}")


def id1_lhs(m: int, n: int, b: int, e: int, rule: Rule = binom) -> int:
    """``(-1)^{m+n-e-b} sum_k (-1)^k binom(b+e+k, m) binom(m, m+n-b-e-k)``."""
    _check_id1_args(m, n, b, e)
    top = m + n - b - e
    s = sum(_sign(k) * rule(b + e + k, m) * rule(m, top - k) for k in range(top + 1))
    return _sign(top) * s


def id1_rhs(m: int, n: int, b: int, e: int, rule: Rule = binom) -> int:
    """Quadruple sum over ``i, c, a, d`` of ``(-1)^{c+d} C(b,i) C(i,c) C(e,a) C(a,d)``."""
    _check_id1_args(m, n, b, e)
    total = 0
    for i in range(b + 1):
        bi = rule(b, i)
        if not bi:
            continue
        for c in range(i + 1):
            bic = _sign(c) * bi * rule(i, c)
            if not bic:
                continue
            for a in range(m - i + 1):
                bea = rule(e, a)
                if not bea:
                    continue
                inner = 0
                for d in range(n - e - b + i - c + a + 1):
                    inner += _sign(d) * rule(a, d)
                total += bic * bea * inner
    return total


def verify_id1(m: int, n: int, b: int, e: int, rule: Rule = binom) -> bool:
    return id1_lhs(m, n, b, e, rule) == id1_rhs(m, n, b, e, rule)


def md3_lhs(m: int, n: int, b: int, e: int, rule: Rule = binom) -> int:
    """``sum_{k=0}^{m+n-b-e} (-1)^k binom(b+e+k, m) binom(m, m+n-b-e-k)``."""
    _check_id1_args(m, n, b, e)
    top = m + n - b - e
    return sum(_sign(k) * rule(b + e + k, m) * rule(m, top - k) for k in range(top + 1))


def md3_rhs(m: int, n: int, b: int, e: int, rule: Rule = binom) -> int:
    """The four-index sum over ``i, j, k, ell`` before the change of variables."""
    _check_id1_args(m, n, b, e)
    total = 0
    for i in range(b + 1):
        for j in range(b - i, b + 1):
            f1 = rule(b, i) * rule(i, i + j - b)
            if not f1:
                continue
            for k in range(m - i + 1):
                f2 = f1 * rule(e, m - k - i)
                if not f2:
                    continue
                for ell in range(m + n - i - j - k - e + 1):
                    total += _sign(k + ell) * f2 * rule(m - k - i, m + n - i - j - k - ell - e)
    return total


# -- L and R --------------------------------------------------------------------


def L(m: int, n: int, H: int, rule: Rule = binom_classical) -> int:
    """``sum_{k=0}^{m+n-H} (-1)^k binom(m+n-k, m) binom(m, k)``; empty (0) if ``H > m+n``."""
    return sum(_sign(k) * rule(m + n - k, m) * rule(m, k) for k in range(m + n - H + 1))


def R(m: int, n: int, H: int, rule: Rule = binom_classical) -> int:
    """``sum_{T=0}^{m} (-1)^{n-H+T} binom(H, T) binom(T-1, n-H+T)``."""
    return sum(_sign(n - H + T) * rule(H, T) * rule(T - 1, n - H + T) for T in range(m + 1))


def recurrence_rhs(m: int, n: int, H: int, rule: Rule = binom_classical) -> int:
    """``(-1)^{n+m-H} binom(H, m) binom(m, n+m-H)``."""
    return _sign(n + m - H) * rule(H, m) * rule(m, n + m - H)


def _second_difference(X, m, n, H, rule):
    return X(m, n, H, rule) - X(m - 1, n, H, rule) - X(m, n - 1, H, rule) + X(m - 1, n - 1, H, rule)


def verify_bilinear_recurrences(m: int, n: int, H: int, rule: Rule = binom_classical) -> bool:
    """Both ``L`` and ``R`` satisfy the same mixed second-difference recurrence."""
    if m < 1 or n < 1:
        raise ValueError("recurrences need m, n >= 1")
    target = recurrence_rhs(m, n, H, rule)
    return (_second_difference(L, m, n, H, rule) == target
            and _second_difference(R, m, n, H, rule) == target)


def verify_r_difference(m: int, n: int, H: int, rule: Rule = binom_classical) -> bool:
    """``R(m,n) - R(m-1,n) = (-1)^{n+m-H} binom(H,m) binom(m-1, n+m-H)``."""
    if m < 1:
        raise ValueError("need m >= 1")
    lhs = R(m, n, H, rule) - R(m - 1, n, H, rule)
    return lhs == _sign(n + m - H) * rule(H, m) * rule(m - 1, n + m - H)


def verify_boundary(m: int, n: int, H_for_m: int, H_for_n: int,
                    rule: Rule = binom_classical) -> bool:
    """``L(m,0) = R(m,0) = 1`` for ``H <= m`` and ``L(0,n) = R(0,n) = 1`` for ``H <= n``."""
    return (L(m, 0, H_for_m, rule) == R(m, 0, H_for_m, rule) == 1
            and L(0, n, H_for_n, rule) == R(0, n, H_for_n, rule) == 1)


# -- antipode identity -------------------------------------------------------------


def id11_expected(n: int, w: int) -> int:
    return 1 if (n, w) in ((0, 0), (1, 0)) else 0


def id11_sum(n: int, w: int, rule: Rule = binom) -> int:
    """``sum_{k,i<=n} sum_{v<=i} (-1)^{k+i} C(i-3, v-3) C(w, v) C(v, n-k-i+v-w)``."""
    if not 0 <= w <= n:
        raise ValueError(f"need n >= w >= 0, got n={n}, w={w}")
    total = 0
    for k in range(n + 1):
        for i in range(n + 1):
            for v in range(i + 1):
                total += _sign(k + i) * rule(i - 3, v - 3) * rule(w, v) * rule(v, n - k - i + v - w)
    return total


def verify_id11(n: int, w: int, rule: Rule = binom) -> bool:
    return id11_sum(n, w, rule) == id11_expected(n, w)


def id11_chain(n: int, w: int, rule: Rule = binom) -> list[int]:
    """Values of the antipode sum at each stage of its reduction.

    Stages: direct sum; ``i -> i + v`` reindexing; upper negation applied to
    ``binom(i+v-3, v-3)``; Vandermonde over ``i``; alternating sum over ``v``;
    final case split.
    """
    stages = [id11_sum(n, w, rule)]
    rng = range(n + 1)
    stages.append(sum(
        _sign(k + i + v) * rule(i + v - 3, v - 3) * rule(w, v) * rule(v, n - k - i - w)
        for k in rng for v in rng for i in range(n - v + 1)))
    stages.append(sum(
        _sign(k + v) * rule(w, v) * sum(rule(2 - v, i) * rule(v, n - k - i - w)
                                        for i in range(n - v + 1))
        for k in rng for v in rng))
    stages.append(sum(_sign(k + v) * rule(2, n - k - w) * rule(w, v) for k in rng for v in rng))
    stages.append(sum(_sign(k) * rule(2, n - k) for k in rng) if w == 0 else 0)
    stages.append(id11_expected(n, w))
    return stages


# -- padding lemma for the bialgebra identity --------------------------------------------


def _md2_coefficient(m, n, k, i, ell, j, b, e, rule):
    return (_sign(k + ell) * rule(b, i) * rule(i, i + j - b) * rule(e, m - k - i)
            * rule(m - k - i, m + n - i - j - k - ell - e))


def _to_tensor(ctx: HopfContext, m: int, n: int, acc: dict) -> TensorElement2:
    terms = {}
    for (b, e), c in acc.items():
        if c:
            if b + e > m + n:
                raise ValueError(f"nonzero term at (b,e)=({b},{e}) has a negative weight power")
            terms[(b, e)] = ctx.ring.from_integer(c) * ctx.lam_power(m + n - b - e)
    return TensorElement2(ctx, terms)


def md2_constrained(ctx: HopfContext, m: int, n: int, rule: Rule = binom) -> TensorElement2:
    """The six-fold sum with its original, index-dependent limits."""
    acc: dict = {}
    for k in range(m + 1):
        for i in range(m - k + 1):
            for ell in range(n + 1):
                for j in range(n - ell + 1):
                    for b in range(j, i + j + 1):
                        for e in range(n - ell - j, n + m - i - j - k - ell + 1):
                            c = _md2_coefficient(m, n, k, i, ell, j, b, e, rule)
                            if c:
                                acc[(b, e)] = acc.get((b, e), 0) + c
    return _to_tensor(ctx, m, n, acc)


def md2_padded(ctx: HopfContext, m: int, n: int, rule: Rule = binom) -> TensorElement2:
    """The same summand with every index running over ``[0, m+n]``."""
    top = range(m + n + 1)
    acc: dict = {}
    for k in top:
        for i in top:
            for ell in top:
                for j in top:
                    for b in top:
                        for e in top:
                            c = _md2_coefficient(m, n, k, i, ell, j, b, e, rule)
                            if c:
                                acc[(b, e)] = acc.get((b, e), 0) + c
    return _to_tensor(ctx, m, n, acc)


def verify_md2_padding(ctx: HopfContext, m: int, n: int, rule: Rule = binom) -> bool:
    try:
        return md2_constrained(ctx, m, n, rule) == md2_padded(ctx, m, n, rule)
    except ValueError:
        return False


# -- classical facts ---------------------------------------------------------------


def verify_upper_negation(A: int, i: int, rule: Rule = binom) -> bool:
    """``binom(-A, i) = (-1)^i binom(A+i-1, i)``."""
    return rule(-A, i) == _sign(i) * rule(A + i - 1, i)


def verify_vandermonde(A: int, B: int, C: int, rule: Rule = binom) -> bool:
    """``sum_j binom(A, j) binom(B, C-j) = binom(A+B, C)`` (for ``A >= 0``)."""
    return sum(rule(A, j) * rule(B, C - j) for j in range(max(A, C) + 1)) == rule(A + B, C)


def verify_alternating(N: int, rule: Rule = binom) -> bool:
    """``sum_{j=0}^{N} (-1)^j binom(N, j) = [N = 0]``."""
    return sum(_sign(j) * rule(N, j) for j in range(N + 1)) == (1 if N == 0 else 0)


# -- sweeps --------------------------------------------------------------------------


@dataclass
class IdentitySweepReport:
    name: str
    ranges: dict[str, Any]
    instances: int
    passed: bool
    counterexample: Optional[dict] = None
    elapsed: float = 0.0

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "name": self.name,
            "ranges": self.ranges,
            "instances": self.instances,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }
        if timings:
            out["elapsed_seconds"] = round(self.elapsed, 6)
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        ranges = format_ranges(self.ranges)
        line = f"[{status}] {self.name} ({ranges}; {self.instances} instances)"
        if self.counterexample:
            line += f"\n       first failure: {self.counterexample}"
        return line


@dataclass
class SweepConfig:
    """Upper limits for each identity sweep."""

    cu2: int = 20
    id1: int = 8
    md3: int = 5
    LR: int = 12
    boundary: int = 12
    R_difference: int = 12
    recurrences: int = 12
    id11: int = 20
    id11_chain: int = 12
    md2: int = 4
    id12: int = 20
    id13: int = 12
    id14: int = 30

    @classmethod
    def names(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    @classmethod
    def empty(cls) -> "SweepConfig":
        return cls(**{name: -1 for name in cls.names()})


def _run(name: str, ranges: dict, cases: Iterable[tuple[dict, Callable[[], tuple[Any, Any]]]]
         ) -> IdentitySweepReport:
    started = time.perf_counter()
    count = 0
    first = None
    for params, evaluate in cases:
        count += 1
        lhs, rhs = evaluate()
        if lhs != rhs and first is None:
            first = {"parameters": params, "lhs": str(lhs), "rhs": str(rhs)}
    return IdentitySweepReport(name, ranges, count, first is None, first,
                               time.perf_counter() - started)


def sweep_identity(name: str, limit: int, ctx: Optional[HopfContext] = None,
                   rule: Optional[Rule] = None) -> IdentitySweepReport:
    """Sweep one identity family up to ``limit``.

    ``rule`` replaces the family's binomial (for mutation tests); ``ctx`` is
    the weighted context for the two families that need one (default ``Z[L]``).
    """
    from .hopf import symbolic_context

    ctx = ctx or symbolic_context()
    N = limit
    sym, cls = rule or binom, rule or binom_classical
    if name == "cu2":
        cases = (({"n": n, "ell": l}, lambda n=n, l=l: (cu2_sum(ctx, n, l),
                                                         ctx.ring.one if l == n else ctx.ring.zero))
                 for n in range(N + 1) for l in range(n + 1))
        return _run(name, {"n": [0, N], "ell": "<=n"}, cases)
    if name == "id1":
        cases = (({"m": m, "n": n, "b": b, "e": e},
                  lambda m=m, n=n, b=b, e=e: (id1_lhs(m, n, b, e, sym), id1_rhs(m, n, b, e, sym)))
                 for m in range(N + 1) for n in range(N + 1)
                 for b in range(m + n + 1) for e in range(m + n - b + 1))
        return _run(name, {"m,n": [0, N], "b+e": "<=m+n"}, cases)
    if name == "md3":
        # pre-substitution sum equals the substituted one up to the global sign
        cases = (({"m": m, "n": n, "b": b, "e": e},
                  lambda m=m, n=n, b=b, e=e: (md3_rhs(m, n, b, e, sym),
                                              _sign(m + n - b - e) * id1_rhs(m, n, b, e, sym)))
                 for m in range(N + 1) for n in range(N + 1)
                 for b in range(m + n + 1) for e in range(m + n - b + 1))
        return _run(name, {"m,n": [0, N], "b+e": "<=m+n"}, cases)
    if name == "LR":
        cases = (({"m": m, "n": n, "H": H}, lambda m=m, n=n, H=H: (L(m, n, H, cls), R(m, n, H, cls)))
                 for m in range(N + 1) for n in range(N + 1) for H in range(m + n + 1))
        return _run(name, {"m,n": [0, N], "H": "<=m+n"}, cases)
    if name == "boundary":
        cases = (({"m": m, "H": H}, lambda m=m, H=H: (
            (L(m, 0, H, cls), R(m, 0, H, cls), L(0, m, H, cls), R(0, m, H, cls)), (1, 1, 1, 1)))
            for m in range(N + 1) for H in range(m + 1))
        return _run(name, {"m": [0, N], "H": "<=m"}, cases)
    if name == "R_difference":
        cases = (({"m": m, "n": n, "H": H}, lambda m=m, n=n, H=H: (
            R(m, n, H, cls) - R(m - 1, n, H, cls),
            _sign(n + m - H) * cls(H, m) * cls(m - 1, n + m - H)))
            for m in range(1, N + 1) for n in range(N + 1) for H in range(m + n + 1))
        return _run(name, {"m": [1, N], "n": [0, N], "H": "<=m+n"}, cases)
    if name == "recurrences":
        def rec(m, n, H):
            t = recurrence_rhs(m, n, H, cls)
            return ((_second_difference(L, m, n, H, cls), _second_difference(R, m, n, H, cls)),
                    (t, t))
        cases = (({"m": m, "n": n, "H": H}, lambda m=m, n=n, H=H: rec(m, n, H))
                 for m in range(1, N + 1) for n in range(1, N + 1) for H in range(m + n + 1))
        return _run(name, {"m,n": [1, N], "H": "<=m+n"}, cases)
    if name == "id11":
        cases = (({"n": n, "w": w}, lambda n=n, w=w: (id11_sum(n, w, sym), id11_expected(n, w)))
                 for n in range(N + 1) for w in range(n + 1))
        return _run(name, {"n": [0, N], "w": "<=n"}, cases)
    if name == "id11_chain":
        def chain(n, w):
            stages = id11_chain(n, w, sym)
            return stages, [stages[-1]] * len(stages)
        cases = (({"n": n, "w": w}, lambda n=n, w=w: chain(n, w))
                 for n in range(N + 1) for w in range(n + 1))
        return _run(name, {"n": [0, N], "w": "<=n"}, cases)
    if name == "md2":
        cases = (({"m": m, "n": n}, lambda m=m, n=n: _md2_pair(ctx, m, n, sym))
                 for m in range(N + 1) for n in range(N + 1 - m))
        return _run(name, {"m+n": f"<={N}"}, cases)
    if name == "id12":
        cases = (({"A": A, "i": i}, lambda A=A, i=i: (sym(-A, i), _sign(i) * sym(A + i - 1, i)))
                 for A in range(N + 1) for i in range(N + 1))
        return _run(name, {"A,i": [0, N]}, cases)
    if name == "id13":
        cases = (({"A": A, "B": B, "C": C}, lambda A=A, B=B, C=C: (
            sum(sym(A, j) * sym(B, C - j) for j in range(max(A, C) + 1)), sym(A + B, C)))
            for A in range(N + 1) for B in range(N + 1) for C in range(N + 1))
        return _run(name, {"A,B,C": [0, N]}, cases)
    if name == "id14":
        cases = (({"N": k}, lambda k=k: (sum(_sign(j) * sym(k, j) for j in range(k + 1)),
                                         1 if k == 0 else 0))
                 for k in range(N + 1))
        return _run(name, {"N": [0, N]}, cases)
    raise KeyError(f"unknown identity {name!r}")


def _md2_pair(ctx, m, n, rule):
    try:
        return md2_constrained(ctx, m, n, rule), md2_padded(ctx, m, n, rule)
    except ValueError as exc:
        return str(exc), "finite padded sum"


def sweep_all(config: Optional[SweepConfig] = None, only: Optional[Iterable[str]] = None,
              ctx: Optional[HopfContext] = None, rule: Optional[Rule] = None,
              on_report: Optional[Callable] = None) -> list[IdentitySweepReport]:
    config = config or SweepConfig()
    names = list(only) if only is not None else SweepConfig.names()
    reports = []
    for name in names:
        if name not in SweepConfig.names():
            raise KeyError(f"unknown identity {name!r}")
        rep = sweep_identity(name, getattr(config, name), ctx, rule)
        reports.append(rep)
        if on_report is not None:
            on_report(rep)
    return sorted(reports, key=lambda r: r.name)
