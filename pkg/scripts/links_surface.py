"""Tabulate log10 M over (n, alpha) for several phi, with the integral bounds alongside.

    python3 scripts/links_surface.py --out links.csv
"""
import argparse
import math
import sys

import numpy as np

from vocabias import zipf


def rows(phis, ns, alphas):
    for phi in phis:
        for n in ns:
            for alpha in alphas:
                seq = zipf.generate(int(n), float(alpha), phi)
                lo, hi = zipf.link_bounds(int(n), seq.tau)
                m = zipf.links(seq)
                yield phi, int(n), float(alpha), m, math.log10(m), lo, hi


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="-")
    ap.add_argument("--n-res", type=int, default=50)
    ap.add_argument("--alpha-res", type=int, default=51)
    args = ap.parse_args(argv)
    ns = np.unique(np.rint(np.geomspace(2, 1000, args.n_res)))
    alphas = np.linspace(0, 2.5, args.alpha_res)
    lines = ["phi,n,alpha,M,log10_M,lower,upper"]
    for r in rows((0, 0.5, 1, 1.5, 2, 2.5), ns, alphas):
        lines.append(",".join(f"{v:.17g}" for v in r))
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
