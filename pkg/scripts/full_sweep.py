"""Run every axiom check and identity sweep, printing timings and writing JSON.

    python scripts/full_sweep.py --max-degree 12 --out results/sweep.json
"""

import argparse
import json
import time
from pathlib import Path

from lambda_hopf.axioms import ALL_CHECKS, check_all, default_jobs
from lambda_hopf.cli import CliConfig
from lambda_hopf.identities import sweep_all


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--ring", default="Z[L]")
    parser.add_argument("--lambda", dest="lam", default=None)
    parser.add_argument("--max-degree", type=int, default=12)
    parser.add_argument("--jobs", type=int, default=default_jobs())
    parser.add_argument("--out", type=Path, default=None)
    args = parser.parse_args()

    ctx = CliConfig(ring=args.ring, lam=args.lam).build_context()
    started = time.perf_counter()
    reports = check_all(ctx, args.max_degree, ALL_CHECKS, jobs=args.jobs)
    for rep in reports:
        print(f"{rep.summary()}  [{rep.elapsed:.3f}s]")
    id_reports = sweep_all()
    for rep in id_reports:
        print(f"{rep.summary()}  [{rep.elapsed:.3f}s]")
    total = time.perf_counter() - started
    ok = all(r.passed for r in reports) and all(r.passed for r in id_reports)
    print(f"{'all passed' if ok else 'FAILURES'} in {total:.2f}s")

    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "ring": ctx.ring.description,
            "lambda": str(ctx.lam),
            "max_degree": args.max_degree,
            "axioms": [r.to_dict(timings=True) for r in reports],
            "identities": [r.to_dict(timings=True) for r in id_reports],
            "total_seconds": round(total, 3),
        }
        args.out.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        print(f"wrote {args.out}")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
