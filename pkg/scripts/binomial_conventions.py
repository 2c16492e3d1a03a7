"""Count identity instances that fail under each extension of binom to k < 0.

The symmetric rule sets binom(x, k) = binom(x, x-k) when x-k >= 0; the
classical rule sets every k < 0 value to 0.  Sums with only nonnegative lower
indices are unaffected; the antipode sums and the L/R pair are not.
"""

import argparse

from lambda_hopf import identities as ids
from lambda_hopf.binomial import binom, binom_classical

RULES = {"symmetric": binom, "classical": binom_classical}


def count(name, rule, limit):
    if name == "id11":
        cases = [(n, w) for n in range(limit + 1) for w in range(n + 1)]
        return sum(not ids.verify_id11(n, w, rule) for n, w in cases), len(cases)
    if name == "LR":
        cases = [(m, n, H) for m in range(limit + 1) for n in range(limit + 1)
                 for H in range(m + n + 1)]
        return sum(ids.L(*c, rule) != ids.R(*c, rule) for c in cases), len(cases)
    if name == "recurrences":
        cases = [(m, n, H) for m in range(1, limit + 1) for n in range(1, limit + 1)
                 for H in range(m + n + 1)]
        return sum(not ids.verify_bilinear_recurrences(*c, rule) for c in cases), len(cases)
    if name == "id1":
        cases = [(m, n, b, e) for m in range(limit + 1) for n in range(limit + 1)
                 for b in range(m + n + 1) for e in range(m + n - b + 1)]
        return sum(not ids.verify_id1(*c, rule) for c in cases), len(cases)
    raise KeyError(name)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=12)
    args = parser.parse_args()
    limits = {"id11": 20, "LR": args.limit, "recurrences": args.limit, "id1": min(args.limit, 6)}
    print(f"{'family':<12} {'rule':<10} failures / instances")
    for name, limit in limits.items():
        for label, rule in RULES.items():
            bad, total = count(name, rule, limit)
            print(f"{name:<12} {label:<10} {bad} / {total}")


if __name__ == "__main__":
    main()
