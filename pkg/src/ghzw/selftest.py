"""Quick property suite behind ``ghzw selftest``.

Each check returns ``(name, ok, detail)``. Sample counts are small so the
whole run takes seconds; the test suite repeats the same checks at scale.
"""

from __future__ import annotations

import random

from . import composition as ca
from . import e6map as E
from . import fts as F
from . import jordan as J
from . import oracles as O
from . import rank_classifier as RC
from . import spaces as S
from . import stateio
from . import varieties as V
from .composition import AlgebraTag
from .exact import div


def check_normal_forms():
    bad = [n for n, c, lab in F.THREE_QUBIT_NORMAL_FORMS
           if str(F.classify_fts(F.embed_three_qubit(c))) != lab]
    return "three-qubit normal forms", not bad, f"mismatches: {bad}" if bad else "6/6"


def check_round_trips(rng, per_label=10):
    bad = 0
    total = 0
    for tag in AlgebraTag:
        for lab in S.labels(S.SpaceDescriptor("fts", tag)):
            for _ in range(per_label):
                total += 1
                bad += F.classify_fts(F.sample_class(tag, lab, rng)).kind != lab.kind
    return "FTS sample/classify round trip", bad == 0, f"{total - bad}/{total}"


def check_recipes(rng, per_label=20):
    """Every raw recipe (no rejection) lands in its stratum most of the time."""
    worst = (1.0, "")
    for tag in AlgebraTag:
        for lab in S.labels(S.SpaceDescriptor("fts", tag)):
            hits = sum(F.classify_fts(F.construct_class(tag, lab, rng)).kind == lab.kind
                       for _ in range(per_label))
            worst = min(worst, (hits / per_label, f"{tag.value} {lab}"))
    return "FTS raw recipes", worst[0] >= 0.5, f"lowest hit rate {worst[0]:.2f} ({worst[1]})"


def check_invariance(rng, per_space=5):
    bad = total = 0
    for name in S.ACTION_SPACES:
        d = S.get(name)
        for lab in S.labels(d):
            for _ in range(per_space):
                v = S.sample(d, lab, rng)
                w = S.random_group_action(d, v, rng)
                total += 1
                bad += S.classify(d, w) != S.classify(d, v)
    return "SLOCC invariance", bad == 0, f"{bad} violations in {total}"


def check_jordan(rng, samples=20):
    bad = 0
    for tag in AlgebraTag:
        for _ in range(samples):
            a, b = J.random_jordan(tag, rng), J.random_jordan(tag, rng)
            if J.sharp(J.sharp(a)) != a * J.cubic_norm(a):
                bad += 1
            taylor = (J.cubic_norm(a) + J.trace_pair(J.sharp(a), b)
                      + J.trace_pair(a, J.sharp(b)) + J.cubic_norm(b))
            if J.cubic_norm(a + b) != taylor:
                bad += 1
    for _ in range(samples):
        x, y = ca.random_elem(AlgebraTag.OCTC, rng), ca.random_elem(AlgebraTag.OCTC, rng)
        if ca.norm(ca.mul(x, y)) != ca.norm(x) * ca.norm(y):
            bad += 1
    return "Jordan identities and octonion norm", bad == 0, f"{bad} failures"


def check_hyperdeterminant(rng, samples=50):
    ratios = set()
    for _ in range(samples):
        c = [rng.randint(-9, 9) for _ in range(8)]
        h = O.hyperdeterminant(c)
        q = F.quartic(F.embed_three_qubit(c))
        if h == 0:
            ratios.add("zero" if q == 0 else "mismatch")
        else:
            ratios.add(div(q, h))
    ratios.discard("zero")
    ok = len(ratios) == 1 and "mismatch" not in ratios
    return "quartic vs hyperdeterminant", ok, f"ratios {sorted(map(str, ratios))}"


def check_table2_oracles(rng, samples=30):
    bad = 0
    for _ in range(samples):
        k = rng.randint(1, 3)
        m = J.random_rank(AlgebraTag.CPLUSC, k, rng)
        bad += J.jordan_rank(m) != O.minor_rank(J.to_matrix3(m))
        m = J.random_rank(AlgebraTag.M2C, k, rng)
        bad += 2 * J.jordan_rank(m) != O.minor_rank(RC.jordan_to_skew6(m))
    return "Table-2 rank oracles", bad == 0, f"{bad} disagreements"


def check_state_io(rng):
    bad = 0
    for name in S.names():
        d = S.get(name)
        v = S.sample(d, S.labels(d)[-1], rng)
        data = stateio.emit(d, v)
        d2, v2 = stateio.parse(data)
        bad += d2 != d or stateio.emit(d2, v2) != data
    return "state file round trip", bad == 0, f"{bad} failures"


def check_dimensions(seed=0):
    bad = []
    for X in V.catalog():
        sec = V.secant_dim(X, 1, seed)
        tan = V.tangential_dim(X, 1, seed)
        if not tan <= sec <= min(2 * X.domain_dim + 1, X.ambient_dim):
            bad.append(X.name)
    return "secant/tangential bounds", not bad, f"bad: {bad}" if bad else f"{len(V.catalog())} varieties"


def check_hessian_span():
    n = E.hessian_span_dim()
    return "Hessian quadric span on Lambda^3 C^6", n == E.HESSIAN_SPAN, str(n)


def run(seed=0) -> list[tuple]:
    rng = random.Random(f"{seed}:selftest")
    return [
        check_normal_forms(),
        check_round_trips(rng),
        check_recipes(rng),
        check_invariance(rng),
        check_jordan(rng),
        check_hyperdeterminant(rng),
        check_table2_oracles(rng),
        check_state_io(rng),
        check_dimensions(seed),
        check_hessian_span(),
    ]
