"""Compare certified lower bounds with the true worst-case error for Halton and random rules."""

import argparse

from lpcurse import (QuadratureRule, certify_best, gen_halton, gen_random, holder_conjugate,
                     initial_error, lp_discrepancy_cellwise, reflect_rule)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=float, default=2.0)
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--n", default="1,2,4,8,16,32")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    pair = holder_conjugate(args.p)
    e0 = initial_error(pair, args.d)
    print(f"initial error {e0:.6g}")
    print(f"{'kind':>7} {'n':>4} {'certificate':>12} {'true error':>12} {'method':>14}")
    for n in (int(v) for v in args.n.split(",")):
        for kind, ps in (("halton", gen_halton(args.d, n)), ("random", gen_random(args.d, n, args.seed))):
            rule = QuadratureRule.qmc(ps)
            cert = certify_best(rule, pair)
            truth = lp_discrepancy_cellwise(reflect_rule(rule), args.p).value
            print(f"{kind:>7} {n:4d} {cert.lower_bound:12.6g} {truth:12.6g} {cert.method:>14}")


if __name__ == "__main__":
    main()
