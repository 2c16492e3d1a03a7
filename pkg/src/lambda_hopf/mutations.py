"""Seeded single-coefficient mutations used to confirm the checkers can fail.

Each structure-map mutation shifts one coefficient of one basis image; each
identity mutation shifts one binomial value seen by one identity family.  A
mutation is *caught* when at least one check or sweep fails on it while the
unmutated baseline passes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .axioms import ALL_CHECKS, check_all, mutate
from .binomial import binom, binom_classical
from .hopf import HopfContext, symbolic_context
from .identities import SweepConfig, sweep_identity


@dataclass(frozen=True)
class PerturbedBinomial:
    """``base`` with the single value at ``(x, k)`` shifted by ``delta``."""

    base: Callable[[int, int], int]
    x: int
    k: int
    delta: int = 1

    def __call__(self, x: int, k: int) -> int:
        value = self.base(x, k)
        return value + self.delta if (x, k) == (self.x, self.k) else value


@dataclass(frozen=True)
class Mutation:
    name: str
    family: str
    description: str
    target: Optional[str] = None  # structure map, for MutatedContext
    at: Any = None
    key: Any = None
    rule: Optional[Callable[[int, int], int]] = None  # identity families


@dataclass
class MutationResult:
    mutation: Mutation
    caught: bool
    caught_by: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.mutation.name,
            "family": self.mutation.family,
            "description": self.mutation.description,
            "caught": self.caught,
            "caught_by": self.caught_by,
        }

    def summary(self) -> str:
        status = "CAUGHT" if self.caught else "MISSED"
        by = ", ".join(self.caught_by) or "-"
        return f"[{status}] {self.mutation.name}: {self.mutation.description} (by {by})"


STRUCTURE_MUTATIONS = (
    Mutation("mul", "structure", "a1*a1 gains +1 on a2", "mul", (1, 1), 2),
    Mutation("unit", "structure", "unit becomes a0 + a1", "unit", None, 1),
    Mutation("comul", "structure", "Delta(a2) gains +1 on a1⊗a1", "comul", 2, (1, 1)),
    Mutation("counit", "structure", "eps(a2) becomes 1", "counit", 2, None),
    Mutation("antipode", "structure", "S(a2) gains +1 on a2", "antipode", 2, 2),
    Mutation("baxter_P", "structure", "P(a1) gains +1 on a3", "shift", 1, 3),
)

IDENTITY_MUTATIONS = (
    Mutation("cu2", "identity", "eps(a1) shifted by 1 inside the counit-lemma sum",
             "counit", 1, None),
    Mutation("id1", "identity", "binom(2, 1) shifted by 1",
             rule=PerturbedBinomial(binom, 2, 1)),
    Mutation("LR", "identity", "classical binom(2, 1) shifted by 1",
             rule=PerturbedBinomial(binom_classical, 2, 1)),
    Mutation("recurrences", "identity", "classical binom(3, 2) shifted by 1",
             rule=PerturbedBinomial(binom_classical, 3, 2)),
    Mutation("id11", "identity", "binom(-3, -3) set to 0",
             rule=PerturbedBinomial(binom, -3, -3, -1)),
    Mutation("md2", "identity", "binom(1, 2) set to 1 (vanishing above the top breaks)",
             rule=PerturbedBinomial(binom, 1, 2)),
    Mutation("id13", "identity", "binom(4, 2) shifted by 1",
             rule=PerturbedBinomial(binom, 4, 2)),
)


def _failed(reports) -> list[str]:
    return sorted({r.name for r in reports if not r.passed})


def run_mutation(mutation: Mutation, ctx: Optional[HopfContext] = None,
                 max_degree: int = 4, config: Optional[SweepConfig] = None) -> MutationResult:
    ctx = ctx or symbolic_context()
    config = config or SweepConfig()
    if mutation.family == "structure":
        mctx = mutate(ctx, mutation.target, mutation.at, mutation.key)
        failed = _failed(check_all(mctx, max_degree, ALL_CHECKS, jobs=1))
        failed += [f"identity:{n}" for n in ("cu2",)
                   if not sweep_identity(n, min(config.cu2, max_degree), mctx).passed]
    elif mutation.rule is None:
        mctx = mutate(ctx, mutation.target, mutation.at, mutation.key)
        failed = [] if sweep_identity(mutation.name, getattr(config, mutation.name), mctx).passed \
            else [f"identity:{mutation.name}"]
    else:
        rep = sweep_identity(mutation.name, getattr(config, mutation.name), ctx, mutation.rule)
        failed = [] if rep.passed else [f"identity:{mutation.name}"]
    return MutationResult(mutation, bool(failed), failed)


def run_mutation_suite(ctx: Optional[HopfContext] = None, max_degree: int = 4,
                       config: Optional[SweepConfig] = None) -> list[MutationResult]:
    mutations = STRUCTURE_MUTATIONS + IDENTITY_MUTATIONS
    return [run_mutation(m, ctx, max_degree, config) for m in mutations]
