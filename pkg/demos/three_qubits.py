"""Three qubits inside the Freudenthal triple system of the Deg0 algebra.

The six SLOCC normal forms are embedded, classified and checked against
Cayley's hyperdeterminant, then pushed around by random SL2 x SL2 x SL2
elements to show the label does not move.
"""

import argparse
import random

from ghzw import fts as F
from ghzw import oracles as O

p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
p.add_argument("--seed", type=int, default=0)
args = p.parse_args()
rng = random.Random(args.seed)

print("normal forms")
for name, amps, expected in F.THREE_QUBIT_NORMAL_FORMS:
    x = F.embed_three_qubit(amps)
    print(f"  {name:8s} q = {F.quartic(x)!s:3s} Det = {O.hyperdeterminant(amps)!s:3s} -> {F.classify_fts(x)}")

# the quartic and the hyperdeterminant agree coefficient for coefficient
c = [rng.randint(-9, 9) for _ in range(8)]
print(f"\nrandom state {c}")
print(f"  q = {F.quartic(F.embed_three_qubit(c))}, Det = {O.hyperdeterminant(c)}")

print("\nlabels along random SLOCC orbits")
for name, amps, _ in F.THREE_QUBIT_NORMAL_FORMS:
    g = [O.random_sl2(rng) for _ in range(3)]
    moved = O.act_three_qubit(amps, *g)
    print(f"  {name:8s} {moved} -> {F.classify_fts(F.embed_three_qubit(moved))}")
