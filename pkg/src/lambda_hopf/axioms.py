"""Executable Hopf-algebra axiom checks.

All structure maps are (bi)linear, so every check runs on basis elements only;
a pass over a degree range is complete for that range.  Comparisons are exact
structural equality of canonical sparse forms.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional

from . import hopf
from .hopf import HopfContext


@dataclass
class Counterexample:
    inputs: dict[str, Any]
    lhs: Any
    rhs: Any
    detail: str = ""


def format_ranges(ranges: dict[str, Any]) -> str:
    parts = []
    for k, v in ranges.items():
        if isinstance(v, str):
            parts.append(f"{k}{v}")
        elif isinstance(v, (list, tuple)) and len(v) == 2:
            parts.append(f"{k}={v[0]}" if v[0] == v[1] else f"{k} in [{v[0]}, {v[1]}]")
        else:
            parts.append(f"{k}={v}")
    return ", ".join(parts)


def _render_value(value: Any) -> Any:
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)


@dataclass
class CheckReport:
    """Outcome of one named check over a parameter range.

    ``parameters`` maps each swept parameter to an inclusive ``[lo, hi]`` range
    (or a short textual constraint such as ``"m+n<=12"``).
    """

    name: str
    ring: str
    parameters: dict[str, Any]
    passed: bool
    instances: int = 0
    counterexample: Optional[Counterexample] = None
    elapsed: float = 0.0
    note: str = ""

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    def sort_key(self):
        return (self.name, repr(sorted(self.parameters.items())))

    def to_dict(self, timings: bool = False) -> dict:
        out: dict[str, Any] = {
            "name": self.name,
            "ring": self.ring,
            "parameters": self.parameters,
            "instances": self.instances,
            "passed": self.passed,
            "counterexample": None,
        }
        if self.counterexample is not None:
            ce = self.counterexample
            out["counterexample"] = {
                "inputs": ce.inputs,
                "lhs": _render_value(ce.lhs),
                "rhs": _render_value(ce.rhs),
                "detail": ce.detail,
            }
        if self.note:
            out["note"] = self.note
        if timings:
            out["elapsed_seconds"] = round(self.elapsed, 6)
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = format_ranges(self.parameters)
        params = f"{params}; " if params else ""
        plural = "" if self.instances == 1 else "s"
        line = f"[{status}] {self.name} ({params}{self.instances} instance{plural}) over {self.ring}"
        if self.counterexample is not None:
            ce = self.counterexample
            line += (f"\n       first failure at {ce.inputs}: lhs = {ce.lhs}, rhs = {ce.rhs}"
                     + (f" [{ce.detail}]" if ce.detail else ""))
        return line


def _single(name: str, ctx: HopfContext, inputs: dict, lhs, rhs, detail: str = "",
            started: Optional[float] = None) -> CheckReport:
    ok = lhs == rhs
    elapsed = 0.0 if started is None else time.perf_counter() - started
    return CheckReport(
        name=name,
        ring=ctx.ring.description,
        parameters={k: [v, v] for k, v in inputs.items()},
        passed=ok,
        instances=1,
        counterexample=None if ok else Counterexample(inputs, lhs, rhs, detail),
        elapsed=elapsed,
    )


def merge(name: str, ctx: HopfContext, parameters: dict, reports: Iterable[CheckReport],
          note: str = "") -> CheckReport:
    """Fold single-instance reports into one; keeps the first counterexample."""
    started = time.perf_counter()
    count = 0
    first: Optional[Counterexample] = None
    for rep in reports:
        count += rep.instances
        if not rep.passed and first is None:
            first = rep.counterexample
    return CheckReport(name, ctx.ring.description, parameters, first is None, count, first,
                       time.perf_counter() - started, note)


# -- coalgebra -----------------------------------------------------------------------


def check_coassociativity(ctx: HopfContext, n: int) -> CheckReport:
    t = time.perf_counter()
    d = ctx.comul_basis(n)
    return _single("coassociativity", ctx, {"n": n}, hopf.comul_left(d), hopf.comul_right(d),
                   started=t)


def check_counit(ctx: HopfContext, n: int) -> CheckReport:
    """Both counit triangles: ``(eps (x) id) Delta = id = (id (x) eps) Delta``."""
    t = time.perf_counter()
    d = ctx.comul_basis(n)
    a_n = ctx.basis(n)
    left = hopf.counit_left(d)
    if left != a_n:
        return _single("counit", ctx, {"n": n}, left, a_n, "left triangle", t)
    return _single("counit", ctx, {"n": n}, hopf.counit_right(d), a_n, "right triangle", t)


def check_cocommutativity(ctx: HopfContext, n: int) -> CheckReport:
    t = time.perf_counter()
    d = ctx.comul_basis(n)
    return _single("cocommutativity", ctx, {"n": n}, hopf.flip(d), d, started=t)


# -- algebra (the product is taken as known; these guard the implementation) ---------


def check_commutativity(ctx: HopfContext, m: int, n: int) -> CheckReport:
    t = time.perf_counter()
    return _single("commutativity", ctx, {"m": m, "n": n}, ctx.basis_mul(m, n),
                   ctx.basis_mul(n, m), started=t)


def check_associativity(ctx: HopfContext, m: int, n: int, p: int) -> CheckReport:
    t = time.perf_counter()
    a = lambda k: ctx.basis(k)  # noqa: E731
    lhs = hopf.mul(ctx.basis_mul(m, n), a(p))
    rhs = hopf.mul(a(m), ctx.basis_mul(n, p))
    return _single("associativity", ctx, {"m": m, "n": n, "p": p}, lhs, rhs, started=t)


def check_unit_law(ctx: HopfContext, n: int) -> CheckReport:
    t = time.perf_counter()
    return _single("unit_law", ctx, {"n": n}, hopf.mul(hopf.unit(ctx), ctx.basis(n)),
                   ctx.basis(n), started=t)


# -- bialgebra -----------------------------------------------------------------------


def check_bialgebra_mul(ctx: HopfContext, m: int, n: int) -> CheckReport:
    """``Delta(a_m a_n) = (mu (x) mu)(id (x) tau (x) id)(Delta a_m (x) Delta a_n)``."""
    t = time.perf_counter()
    lhs = hopf.comul(ctx.basis_mul(m, n))
    rhs = hopf.mul2(ctx.comul_basis(m), ctx.comul_basis(n))
    return _single("bialgebra_mul", ctx, {"m": m, "n": n}, lhs, rhs, started=t)


def check_bialgebra_counit(ctx: HopfContext, m: int, n: int) -> CheckReport:
    """``eps(a_m a_n) = eps(a_m) eps(a_n)``."""
    t = time.perf_counter()
    lhs = hopf.counit(ctx.basis_mul(m, n))
    rhs = ctx.counit_basis(m) * ctx.counit_basis(n)
    return _single("bialgebra_counit", ctx, {"m": m, "n": n}, lhs, rhs, started=t)


def check_unit_compat(ctx: HopfContext) -> CheckReport:
    """``Delta(eta 1) = eta 1 (x) eta 1`` and ``eps(eta 1) = 1``."""
    t = time.perf_counter()
    e = hopf.unit(ctx)
    lhs, rhs = hopf.comul(e), hopf.tensor(e, e)
    if lhs != rhs:
        return _single("unit_compat", ctx, {}, lhs, rhs, "Delta after eta", t)
    return _single("unit_compat", ctx, {}, hopf.counit(e), ctx.ring.one, "eps after eta", t)


# -- antipode and Baxter identity --------------------------------------------------------


def check_antipode(ctx: HopfContext, n: int) -> CheckReport:
    """``(S * id)(a_n) = (id * S)(a_n) = eta(eps(a_n))``."""
    t = time.perf_counter()
    S = hopf.antipode_endo(ctx, n)
    I = hopf.identity_endo(ctx, n)
    target = hopf.eta_eps(ctx, n).image(n)
    left = hopf.convolution(S, I, n)
    if left != target:
        return _single("antipode", ctx, {"n": n}, left, target, "S*id", t)
    return _single("antipode", ctx, {"n": n}, hopf.convolution(I, S, n), target, "id*S", t)


def check_baxter(ctx: HopfContext, m: int, n: int) -> CheckReport:
    """``P(x)P(y) = P(x P(y)) + P(y P(x)) + lam P(xy)`` at ``x = a_m, y = a_n``."""
    t = time.perf_counter()
    P = hopf.baxter_P
    x, y = ctx.basis(m), ctx.basis(n)
    lhs = P(x) * P(y)
    rhs = P(x * P(y)) + P(y * P(x)) + P(x * y).scale(ctx.lam)
    return _single("baxter", ctx, {"m": m, "n": n}, lhs, rhs, started=t)


# -- sweeps ----------------------------------------------------------------------------


def _pairs(total: int):
    return [(m, n) for m in range(total + 1) for n in range(total + 1 - m)]


def sweep(name: str, ctx: HopfContext, max_degree: int) -> CheckReport:
    """Run one named check over its full range up to ``max_degree``."""
    N = max_degree
    t = time.perf_counter()
    if name == "coassociativity":
        rep = merge(name, ctx, {"n": [0, N]}, (check_coassociativity(ctx, n) for n in range(N + 1)))
    elif name == "counit":
        rep = merge(name, ctx, {"n": [0, N]}, (check_counit(ctx, n) for n in range(N + 1)))
    elif name == "cocommutativity":
        rep = merge(name, ctx, {"n": [0, N]},
                    (check_cocommutativity(ctx, n) for n in range(N + 1)))
    elif name == "antipode":
        rep = merge(name, ctx, {"n": [0, N]}, (check_antipode(ctx, n) for n in range(N + 1)))
    elif name == "unit_law":
        rep = merge(name, ctx, {"n": [0, N]}, (check_unit_law(ctx, n) for n in range(N + 1)))
    elif name == "bialgebra_mul":
        rep = merge(name, ctx, {"m+n": f"<={N}"},
                    (check_bialgebra_mul(ctx, m, n) for m, n in _pairs(N)))
    elif name == "bialgebra_counit":
        rep = merge(name, ctx, {"m+n": f"<={N}"},
                    (check_bialgebra_counit(ctx, m, n) for m, n in _pairs(N)))
    elif name == "commutativity":
        rep = merge(name, ctx, {"m+n": f"<={N}"},
                    (check_commutativity(ctx, m, n) for m, n in _pairs(N)))
    elif name == "associativity":
        triples = [(m, n, p) for m, n in _pairs(N) for p in range(N + 1 - m - n)]
        rep = merge(name, ctx, {"m+n+p": f"<={N}"},
                    (check_associativity(ctx, *mnp) for mnp in triples))
    elif name == "unit_compat":
        rep = merge(name, ctx, {}, [check_unit_compat(ctx)])
    elif name == "baxter":
        rep = merge(name, ctx, {"m": [0, N], "n": [0, N]},
                    (check_baxter(ctx, m, n) for m in range(N + 1) for n in range(N + 1)))
    else:
        raise KeyError(f"unknown check {name!r}")
    rep.elapsed = time.perf_counter() - t
    return rep


HOPF_CHECKS = (
    "coassociativity",
    "counit",
    "cocommutativity",
    "unit_law",
    "commutativity",
    "associativity",
    "bialgebra_mul",
    "bialgebra_counit",
    "unit_compat",
    "antipode",
)
ALL_CHECKS = HOPF_CHECKS + ("baxter",)


def _sweep_task(args):
    name, ctx, max_degree = args
    return sweep(name, ctx, max_degree)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("LAMBDA_HOPF_JOBS", "1")))
    except ValueError:
        return 1


def check_all(ctx: HopfContext, max_degree: int, names: Iterable[str] = ALL_CHECKS,
              jobs: Optional[int] = None, on_report: Optional[Callable] = None) -> list[CheckReport]:
    """Run every named check up to ``max_degree``; reports sorted by name."""
    names = list(names)
    jobs = default_jobs() if jobs is None else jobs
    tasks = [(name, ctx, max_degree) for name in names]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_sweep_task, tasks))
    else:
        reports = []
        for task in tasks:
            reports.append(_sweep_task(task))
            if on_report is not None:
                on_report(reports[-1])
    return sorted(reports, key=CheckReport.sort_key)


# -- mutation support -------------------------------------------------------------------


@dataclass(frozen=True)
class MutatedContext(HopfContext):
    """A context whose structure map ``target`` has one coefficient shifted.

    ``at`` selects the basis input (an int degree, ``(m, n)`` for ``mul``, or
    ``None`` for ``unit``); ``key`` is the output index whose coefficient gets
    ``delta`` added.
    """

    target: str = "comul"
    at: Any = 0
    key: Any = (0, 0)
    delta: int = 1

    def _bump(self, element):
        d = self.ring.from_integer(self.delta)
        terms = dict(element.terms)
        terms[self.key] = terms.get(self.key, self.ring.zero) + d
        return type(element)(self, terms)

    def _compute_unit(self):
        base = super()._compute_unit()
        return self._bump(base) if self.target == "unit" else base

    def _compute_mul(self, m, n):
        base = super()._compute_mul(m, n)
        return self._bump(base) if self.target == "mul" and (m, n) == tuple(self.at) else base

    def _compute_comul(self, n):
        base = super()._compute_comul(n)
        return self._bump(base) if self.target == "comul" and n == self.at else base

    def _compute_counit(self, n):
        base = super()._compute_counit(n)
        if self.target == "counit" and n == self.at:
            return base + self.ring.from_integer(self.delta)
        return base

    def _compute_antipode(self, n):
        base = super()._compute_antipode(n)
        return self._bump(base) if self.target == "antipode" and n == self.at else base

    def _compute_shift(self, n):
        base = super()._compute_shift(n)
        return self._bump(base) if self.target == "shift" and n == self.at else base


def mutate(ctx: HopfContext, target: str, at: Any, key: Any, delta: int = 1) -> MutatedContext:
    return MutatedContext(ctx.ring, ctx.lam, ctx.antipode_rule,
                          target=target, at=at, key=key, delta=delta)
