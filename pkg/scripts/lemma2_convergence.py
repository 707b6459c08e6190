"""Gap between the AME of rescaled binomial profiles and H2(delta) - (1 - R) as n grows."""

from __future__ import annotations

from _common import parser, write_csv
from cqbounds import codes

DELTAS = (0.1, 0.25, 0.5)
RATES = (0.25, 0.5, 0.75)


def main():
    p = parser(__doc__)
    p.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64, 128, 256, 512, 1024, 2048, 4096])
    args = p.parse_args()
    rows = []
    for n in args.sizes:
        gap = 0.0
        for rate in RATES:
            exps = codes.rescaled_binomial_exponents(n, rate).exponents
            for delta in DELTAS:
                d = round(delta * n)
                gap = max(gap, abs(exps[d] - codes.iaame(d / n, rate)))
        rows.append((n, gap))
        print(f"n = {n:5d}  max gap {gap:.5f}")
    write_csv(args.out_dir, "lemma2_convergence.csv", ["n", "max_gap"], rows)


if __name__ == "__main__":
    main()
