"""Secant and tangential dimensions for the whole variety catalog.

Case1 rows (tau a hypersurface, sigma everything) carry W and GHZ classes;
Case2 rows (sigma = tau proper) carry only two entanglement types.
"""

import argparse
import time

from ghzw import tables as TB
from ghzw import varieties as V

p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
p.add_argument("--trials", type=int, default=V.DEFAULT_TRIALS)
p.add_argument("--seed", type=int, default=0)
p.add_argument("--format", choices=("plain", "csv", "md"), default="plain")
args = p.parse_args()

t0 = time.perf_counter()
print(TB.render(TB.DIMS_HEADER, TB.dims_rows(V.names(), args.trials, args.seed), args.format))
print("Table 1")
print(TB.render(TB.HEADER, TB.table1_rows(args.trials, args.seed), args.format))
print("Table 2")
print(TB.render(TB.HEADER, TB.table2_rows(args.trials, args.seed), args.format))
print(f"{time.perf_counter() - t0:.1f}s")
