"""Cutoff-rate bound data.

``fig1a_c{c}.csv``: IAAME at rate R against the decoder line delta*log2(1/c);
the gap between them is minimised at the effective distance.
``fig1b_cutoff_rate.csv``: R0 = 1 - log2(1 + c) over c in [0, 1].
"""

from __future__ import annotations

import math

import numpy as np

from _common import parser, write_csv
from cqbounds import bounds, codes


def main():
    p = parser(__doc__.splitlines()[0])
    p.add_argument("--rate", type=float, default=0.25)
    p.add_argument("--points", type=int, default=201)
    args = p.parse_args()

    deltas = np.linspace(0.0, 1.0, args.points)
    for c in (0.25, 0.5):
        rows = []
        for d in deltas:
            line = d * math.log2(1 / c)
            a = codes.iaame(float(d), args.rate)
            rows.append((d, a, line, line - a))
        write_csv(args.out_dir, f"fig1a_c{c}.csv", ["delta", "iaame", "decoder_line", "gap"], rows)
        bound = bounds.theorem1_bound(bounds.BinaryBoundParams(c, args.rate)).value
        print(f"c = {c}: delta_eff = {bounds.effective_distance(c):.6f}, E_cut(R = {args.rate}) = {bound:.6f}")

    cs = np.linspace(0.0, 1.0, args.points)
    write_csv(args.out_dir, "fig1b_cutoff_rate.csv", ["c", "R0"], [(c, bounds.binary_cutoff_rate(c)) for c in cs])


if __name__ == "__main__":
    main()
