"""Solve the antipode as the convolution inverse of id and compare with the closed form.

Also shows the degree-zero failure when binom(x, k) is taken to vanish for k < 0.
"""

import argparse

from lambda_hopf.binomial import binom_classical
from lambda_hopf.hopf import solve_antipode, symbolic_context


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max", type=int, default=6)
    args = parser.parse_args()

    ctx = symbolic_context()
    for n, s in enumerate(solve_antipode(ctx, args.max)):
        closed = ctx.antipode_basis(n)
        mark = "ok" if s == closed else "MISMATCH"
        print(f"S(a{n}) = {s}   [{mark}]")

    bad = symbolic_context(antipode_rule=binom_classical)
    print()
    print("with binom(x, k<0) = 0:")
    print(f"  closed form S(a0) = {bad.antipode_basis(0) or 0}")
    print(f"  oracle      S(a0) = {solve_antipode(bad, 0)[0]}")


if __name__ == "__main__":
    main()
