"""Effective distance c/(1+c) against the channel parameter."""

from __future__ import annotations

import numpy as np

from _common import parser, write_csv
from cqbounds import bounds


def main():
    p = parser(__doc__)
    p.add_argument("--points", type=int, default=201)
    args = p.parse_args()
    rows = [(c, bounds.effective_distance(c)) for c in np.linspace(0.0, 1.0, args.points)]
    write_csv(args.out_dir, "fig2_effective_distance.csv", ["c", "delta_eff"], rows)


if __name__ == "__main__":
    main()
