"""Write C_p and C~_p over a log-spaced p grid to CSV, optionally plotting if matplotlib is present."""

import argparse
import csv

import numpy as np

from lpcurse import curse_constant, holder_conjugate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-min", type=float, default=1.001)
    ap.add_argument("--p-max", type=float, default=50.0)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--out", default="constants_curve.csv")
    ap.add_argument("--plot", default=None, help="optional PNG path (needs matplotlib)")
    args = ap.parse_args()

    ps = np.geomspace(args.p_min, args.p_max, args.samples)
    rows = [(p, curse_constant(holder_conjugate(p), "cp"), curse_constant(holder_conjugate(p), "cptilde"))
            for p in ps]
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["p", "cp", "cptilde"])
        w.writerows(rows)
    print(f"wrote {len(rows)} rows to {args.out}")

    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        arr = np.array(rows)
        plt.semilogx(arr[:, 0], arr[:, 1], label="C_p")
        plt.semilogx(arr[:, 0], arr[:, 2], label="C~_p")
        plt.xlabel("p")
        plt.legend()
        plt.savefig(args.plot, dpi=150)


if __name__ == "__main__":
    main()
