"""Command-line interface.

Usage::

    lambda-hopf binom X K [--rule symmetric|classical]
    lambda-hopf binom --table X K
    lambda-hopf constants {mul,comul,antipode} [--ring R] [--lambda EXPR] [--max N] [--format F]
    lambda-hopf check {axioms,identities,baxter,mutations,all} [--ring R] [--lambda EXPR]
                      [--max-degree N] [--only NAME]... [--max M] [--json] [--jobs J]
    lambda-hopf iso {build,check} --ring R --lambda A --nu B --omega W [--max N] [--json]
    lambda-hopf iso probe --ring R --nu B --p P --k K [--json]

Rings: Z, Q, Z/n, Fp, Z[L], Fp[x]/x^r, Z[x]/x^r, Q[x]/x^r.
Element expressions: integers, + - * /, ^ for powers, parentheses, and the
ring's symbol (L in Z[L], x in the truncated polynomial rings).  Division
needs a unit divisor, e.g. 2/3 in Q.  Over Z[L] the weight defaults to L.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 for usage or configuration errors.  The default job count comes from
LAMBDA_HOPF_JOBS.  ``--config FILE`` reads ``key = value`` lines (keys:
ring, lambda, max_degree, format, jobs, and any identity name as its sweep
limit); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import axioms, identities, iso, mutations
from .binomial import binom, binom_classical, binom_table_csv
from .hopf import HopfContext
from .ring import Ring, RingElement, RingParseError, SymbolicLambdaRing, parse_element, parse_ring

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    ring: str = "Z[L]"
    lam: Optional[str] = None
    max_degree: int = 12
    format: str = "human"
    jobs: int = 1
    config_path: Optional[str] = None
    identity_limits: dict[str, int] = field(default_factory=dict)

    def build_ring(self) -> Ring:
        return parse_ring(self.ring)

    def build_context(self) -> HopfContext:
        ring = self.build_ring()
        if self.lam is None:
            if isinstance(ring, SymbolicLambdaRing):
                return HopfContext(ring, ring.generator)
            raise UsageError(f"--lambda is required for ring {ring.description}")
        return HopfContext(ring, parse_element(ring, self.lam))


def read_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        values[key.replace("-", "_")] = value
    return values


def _int(value: str, what: str, minimum: int = 0) -> int:
    try:
        out = int(value)
    except (TypeError, ValueError):
        raise UsageError(f"{what} must be an integer, got {value!r}") from None
    if out < minimum:
        raise UsageError(f"{what} must be >= {minimum}, got {out}")
    return out


def build_config(args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(jobs=axioms.default_jobs())
    file_values = read_config_file(args.config) if getattr(args, "config", None) else {}
    cfg.config_path = getattr(args, "config", None)
    known = {"ring", "lambda", "max_degree", "format", "jobs"}
    for key, value in file_values.items():
        if key == "ring":
            cfg.ring = value
        elif key == "lambda":
            cfg.lam = value
        elif key == "max_degree":
            cfg.max_degree = _int(value, "max_degree")
        elif key == "format":
            cfg.format = value
        elif key == "jobs":
            cfg.jobs = _int(value, "jobs", 1)
        elif key in identities.SweepConfig.names():
            cfg.identity_limits[key] = _int(value, key)
        elif key not in known:
            raise UsageError(f"unknown config key {key!r}")
    if getattr(args, "ring", None) is not None:
        cfg.ring = args.ring
    if getattr(args, "lam", None) is not None:
        cfg.lam = args.lam
    if getattr(args, "max_degree", None) is not None:
        cfg.max_degree = args.max_degree
    if getattr(args, "jobs", None) is not None:
        cfg.jobs = args.jobs
    if getattr(args, "json", False):
        cfg.format = "json"
    elif getattr(args, "format", None) is not None:
        cfg.format = args.format
    if cfg.format not in ("human", "json", "csv"):
        raise UsageError(f"unknown format {cfg.format!r}")
    return cfg


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# -- binom ---------------------------------------------------------------------------


def cmd_binom(args, out) -> int:
    rule = binom_classical if args.rule == "classical" else binom
    if args.table:
        out.write(binom_table_csv(args.x, args.k, rule))
    else:
        out.write(f"{rule(args.x, args.k)}\n")
    return EXIT_OK


# -- constants -------------------------------------------------------------------------


def _comul_order(n):
    # formula order: k = n - i - j ascending, then i ascending
    return lambda key: (n - key[0] - key[1], key[0])


def cmd_constants(args, out) -> int:
    cfg = build_config(args)
    ctx = cfg.build_context()
    N = args.max
    rows = []
    if args.kind == "mul":
        for m in range(N + 1):
            for n in range(N + 1):
                val = ctx.basis_mul(m, n)
                rows.append(((m, n), val, val.render(key=lambda d: -d)))
    elif args.kind == "comul":
        for n in range(N + 1):
            val = ctx.comul_basis(n)
            rows.append(((n,), val, val.render(key=_comul_order(n))))
    else:
        for n in range(N + 1):
            val = ctx.antipode_basis(n)
            rows.append(((n,), val, val.render()))
    index_names = ["m", "n"] if args.kind == "mul" else ["n"]
    if cfg.format == "json":
        payload = {
            "kind": args.kind,
            "ring": ctx.ring.description,
            "lambda": str(ctx.lam),
            "entries": [{**dict(zip(index_names, idx)), "image": val.to_json(), "text": text}
                        for idx, val, text in rows],
        }
        out.write(_dump(payload) + "\n")
    elif cfg.format == "csv":
        import csv

        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([*index_names, "value"])
        for idx, _, text in rows:
            writer.writerow([*idx, text])
    else:
        for idx, _, text in rows:
            out.write(f"{','.join(map(str, idx))}: {text}\n")
    return EXIT_OK


# -- check -------------------------------------------------------------------------------


def _sweep_config(cfg: CliConfig, only, max_override) -> identities.SweepConfig:
    sc = identities.SweepConfig(**cfg.identity_limits)
    if max_override is not None:
        for name in (only or identities.SweepConfig.names()):
            setattr(sc, name, max_override)
    return sc


def cmd_check(args, out) -> int:
    cfg = build_config(args)
    ctx = cfg.build_context()
    N = cfg.max_degree
    suite = args.suite
    only = args.only
    if only:
        unknown = [n for n in only if n not in identities.SweepConfig.names() + list(axioms.ALL_CHECKS)]
        if unknown:
            raise UsageError(f"unknown check name(s): {', '.join(unknown)}")
    human = cfg.format != "json"
    entries: list[dict] = []
    passed = True

    def emit(line):
        if human:
            out.write(line + "\n")
            out.flush()

    if suite in ("axioms", "baxter", "all"):
        names = list(axioms.HOPF_CHECKS if suite == "axioms" else
                     ("baxter",) if suite == "baxter" else axioms.ALL_CHECKS)
        if only:
            names = [n for n in names if n in only]
        if human:
            emit(f"# Hopf checks over {ctx.ring.description}, lambda = {ctx.lam}, degrees <= {N}")
        reports = axioms.check_all(ctx, N, names, jobs=cfg.jobs)
        for rep in reports:
            emit(rep.summary())
            passed &= rep.passed
            entries.append({"suite": "baxter" if rep.name == "baxter" else "axioms",
                            **rep.to_dict(args.timings)})
    if suite in ("identities", "all"):
        id_only = [n for n in only if n in identities.SweepConfig.names()] if only else None
        if suite == "identities" or not only or id_only:
            sc = _sweep_config(cfg, id_only, args.max)
            emit("# identity sweeps")
            for rep in identities.sweep_all(sc, id_only):
                emit(rep.summary())
                passed &= rep.passed
                entries.append({"suite": "identities", **rep.to_dict(args.timings)})
    if suite == "mutations":
        emit(f"# mutation suite over {ctx.ring.description}, degrees <= {min(N, 4)}")
        for res in mutations.run_mutation_suite(ctx, max_degree=min(N, 4)):
            emit(res.summary())
            passed &= res.caught
            entries.append({"suite": "mutations", **res.to_dict()})
    if human:
        emit("all checks passed" if passed else "SOME CHECKS FAILED")
    else:
        out.write(_dump(entries) + "\n")
    return EXIT_OK if passed else EXIT_FAIL


# -- iso ----------------------------------------------------------------------------------


def _parse(ring: Ring, text: Optional[str], flag: str) -> RingElement:
    if text is None:
        raise UsageError(f"{flag} is required")
    return parse_element(ring, text)


def cmd_iso(args, out) -> int:
    cfg = build_config(args)
    ring = cfg.build_ring()
    as_json = cfg.format == "json"
    if args.action == "probe":
        nu = _parse(ring, args.nu, "--nu")
        ctx = HopfContext(ring, nu)
        try:
            value = iso.p_power_leading(ctx, args.k, args.p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        expected = nu ** ((args.p - 1) * args.k)
        if as_json:
            out.write(_dump({
                "ring": ring.description, "nu": str(nu), "p": args.p, "k": args.k,
                "characteristic": ring.characteristic,
                "leading_coefficient": str(value),
                "expected_nu_power": str(expected),
                "matches": value == expected,
                "nonzero": bool(value),
            }) + "\n")
        else:
            out.write(f"{value}\n")
        return EXIT_OK if value == expected else EXIT_FAIL

    lam = _parse(ring, cfg.lam, "--lambda")
    nu = _parse(ring, args.nu, "--nu")
    omega = _parse(ring, args.omega, "--omega")
    try:
        phi, inverse = iso.build_scaling_iso(ring, lam, nu, omega, args.max)
    except iso.IsoError as exc:
        raise UsageError(str(exc)) from None
    if args.action == "build":
        if as_json:
            out.write(_dump({"map": phi.to_json(), "inverse": inverse.to_json()}) + "\n")
        else:
            for n, img in enumerate(phi.images):
                out.write(f"a{n} -> {img}\n")
        return EXIT_OK

    reports = [iso.check_hopf_morphism(phi, args.max), iso.check_hopf_morphism(inverse, args.max),
               iso.check_round_trip(phi, inverse, args.max)]
    obstruction = iso.map_obstruction(phi)
    obstruction_ok = obstruction == lam
    passed = all(r.passed for r in reports) and obstruction_ok
    if as_json:
        out.write(_dump({
            "reports": [r.to_dict(args.timings) for r in reports],
            "obstruction": {"value": str(obstruction), "source_lambda": str(lam),
                            "matches": obstruction_ok},
            "passed": passed,
        }) + "\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
        status = "PASS" if obstruction_ok else "FAIL"
        out.write(f"[{status}] obstruction of phi(a1) = {obstruction} (source lambda {lam})\n")
    return EXIT_OK if passed else EXIT_FAIL


# -- parser --------------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, max_flag: bool = True):
    p.add_argument("--ring", default=None, help="ring spec (default Z[L])")
    p.add_argument("--lambda", dest="lam", default=None, help="weight expression")
    p.add_argument("--config", default=None, help="key = value config file")
    p.add_argument("--format", choices=["human", "json", "csv"], default=None)
    p.add_argument("--json", action="store_true", help="shorthand for --format json")


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambda-hopf",
        description="Exact computations in the weight-lambda divided power Hopf algebra.",
        epilog="Rings:" + __doc__.split("Rings:", 1)[1] if __doc__ else None,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("binom", help="generalised binomial coefficients")
    p.add_argument("x", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--table", action="store_true", help="CSV grid for |x| <= X, |k| <= K")
    p.add_argument("--rule", choices=["symmetric", "classical"], default="symmetric")
    p.set_defaults(func=cmd_binom)

    p = sub.add_parser("constants", help="tabulate structure constants")
    p.add_argument("kind", choices=["mul", "comul", "antipode"])
    p.add_argument("--max", type=int, default=3)
    _common(p)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("suite", choices=["axioms", "identities", "baxter", "mutations", "all"])
    p.add_argument("--max-degree", dest="max_degree", type=int, default=None)
    p.add_argument("--only", action="append", default=None, help="restrict to a named check")
    p.add_argument("--max", type=int, default=None, help="override identity sweep limits")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--timings", action="store_true", help="include elapsed times in JSON")
    _common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("iso", help="scaling isomorphisms and obstruction probes")
    p.add_argument("action", choices=["build", "check", "probe"])
    p.add_argument("--nu", default=None)
    p.add_argument("--omega", default=None)
    p.add_argument("--max", type=int, default=10)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--timings", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    for attr in ("max", "max_degree"):
        value = getattr(args, attr, None)
        if value is not None and value < 0:
            print(f"error: --{attr.replace('_', '-')} must be >= 0", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, RingParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
