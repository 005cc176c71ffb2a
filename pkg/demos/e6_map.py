"""From the quartic on Lambda^3 C^6 to the adjoint variety of E6.

The reduced Hessian of the quartic gives 35 independent quadrics (the
equations of G(3,6)); together with the cubic gradient and the quartic
itself they define a degree-4 map C^22 -> C^78 whose image spans the
adjoint representation.
"""

import argparse
import random

from ghzw import e6map as E
from ghzw import oracles as O

p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
p.add_argument("--seed", type=int, default=0)
args = p.parse_args()
rng = random.Random(args.seed)

print("independent Hessian quadrics:", E.hessian_span_dim())
print("linear span of 200 image points:", E.image_span_dim(200, args.seed))
print("dimension of the image:", E.image_dim(3, args.seed))

# on a decomposable 3-vector the quadrics and the quartic vanish
u, v, w = ([rng.randint(-3, 3) for _ in range(6)] for _ in range(3))
c = O.wedge3(u, v, w)
y = E.e6_map(1, c, 1).coords
print("\nimage of (1, u ^ v ^ w, 1):")
print("  quadric block zero:", not any(y[22:57]))
print("  last coordinate:", y[-1])
