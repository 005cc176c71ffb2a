"""Rank classification for the systems without a W class.

The two-qutrit state |00> + |11> is rank two, i.e. a generic point of the
secant variety. Random Severi samples are checked against ordinary matrix
rank and against the rank of the associated 6 x 6 skew matrix.
"""

import argparse
import random

from ghzw import jordan as J
from ghzw import oracles as O
from ghzw import rank_classifier as RC
from ghzw import spaces as S
from ghzw.composition import AlgebraTag

p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
p.add_argument("--seed", type=int, default=0)
p.add_argument("--samples", type=int, default=100)
args = p.parse_args()
rng = random.Random(args.seed)

d = S.get("two-qutrits")
print("|00> + |11> ->", S.classify(d, S.decode(d, [1, 0, 0, 0, 1, 0, 0, 0, 0])))

agree = {"matrix": 0, "skew": 0}
for _ in range(args.samples):
    k = rng.randint(1, 3)
    m = J.random_rank(AlgebraTag.CPLUSC, k, rng)
    agree["matrix"] += J.jordan_rank(m) == O.minor_rank(J.to_matrix3(m))
    m = J.random_rank(AlgebraTag.M2C, k, rng)
    agree["skew"] += 2 * J.jordan_rank(m) == O.minor_rank(RC.jordan_to_skew6(m))
print(f"CplusC Jordan rank = matrix rank   {agree['matrix']}/{args.samples}")
print(f"M2C 2 x Jordan rank = skew rank    {agree['skew']}/{args.samples}")

print("\nsampled representatives")
for name in ("severi-complex", "two-qutrits", "wedge2-6", "severi-octonion", "matrix3x4", "skew-5", "skew-7"):
    d = S.get(name)
    print(f"  {name:16s}", ", ".join(str(S.classify(d, S.sample(d, lab, rng))) for lab in S.labels(d)))
