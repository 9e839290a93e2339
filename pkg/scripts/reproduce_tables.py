"""Print C_p and C~_p (with maximizers) for a set of exponents."""

import argparse

from lpcurse import decomposition_constants, holder_conjugate, spline_constants


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", default="2,3,4,5,10,20,30,100")
    args = ap.parse_args()
    print(f"{'p':>6} {'C_p':>12} {'C~_p':>12} {'y_alpha':>10} {'y_beta':>10}")
    for p in (float(v) for v in args.p.split(",")):
        pair = holder_conjugate(p)
        c = decomposition_constants(pair)
        s = spline_constants(pair)
        print(f"{p:6g} {c.c_p:12.8f} {s.c_tilde:12.8f} {s.y_alpha:10.6f} {s.y_beta:10.6f}")


if __name__ == "__main__":
    main()
