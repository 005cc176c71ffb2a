"""The four orbit types across the FTS series.

For every algebra tag a representative of each class is sampled and the
invariants that separate the classes are printed: the quartic q, whether
its gradient vanishes, and the rank of the reduced Hessian.
"""

import argparse
import random

from ghzw import fts as F
from ghzw import spaces as S
from ghzw.composition import AlgebraTag
from ghzw.exact import rank

p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
p.add_argument("--seed", type=int, default=0)
args = p.parse_args()
rng = random.Random(args.seed)

print(f"{'algebra':10s} {'dim':>4s}  {'class':18s} {'q = 0':6s} {'grad = 0':9s} {'reduced Hessian rank':>20s}")
for tag in AlgebraTag:
    for label in S.labels(S.SpaceDescriptor("fts", tag)):
        x = F.sample_class(tag, label, rng)
        q0 = F.quartic(x) == 0
        g0 = not any(F.gradient(x))
        r = rank(F.reduced_hessian(x))
        print(f"{tag.value:10s} {F.fts_dim(tag):4d}  {str(F.classify_fts(x)):18s} {q0!s:6s} {g0!s:9s} {r:20d}")
    print()

# the DegMinus1 system (binary cubics) has no biseparable stratum
print("DegMinus1 labels:", ", ".join(map(str, S.labels(S.SpaceDescriptor("fts", AlgebraTag.DEG_MINUS1)))))
