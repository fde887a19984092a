"""Shared fixtures, sample pools, and random-instance generators.

Randomized tests draw from seeded ``random.Random`` instances so every
run exercises the same cases.  Tropical matrices are built from
integer-valued floats: max/min/+ are exact on those, which lets the
cross-algorithm tests assert bitwise equality instead of tolerances.
"""

import random

import pytest

import semiralg as sa
from semiralg import NEG_INF, POS_INF, Matrix, WeightedDigraph, make_semiring

SEED = 20260819

IDEMPOTENT_NAMES = ["maxplus", "maxplus_complete", "minplus", "maxmin", "boolean"]
ALL_NAMES = IDEMPOTENT_NAMES + ["rplus", "rplus_complete", "real_field"]

# ---------------------------------------------------------------- descriptors


def descriptor(name):
    """Catalog descriptor by name; maxmin gets the default [0, 10] bounds."""
    if name == "maxmin":
        return make_semiring("maxmin", (0.0, 10.0))
    return make_semiring(name)


# Scalar pools for law probes.  Every value is legal in its carrier and
# the pools include both neutral elements and the infinity tags where
# the carrier has them.
SCALAR_SAMPLES = {
    "rplus": [0.0, 0.25, 0.5, 1.0, 2.0],
    "rplus_complete": [0.0, 0.5, 1.0, 3.0, POS_INF],
    "maxplus": [NEG_INF, -3.0, -1.0, 0.0, 2.0],
    "maxplus_complete": [NEG_INF, -2.0, 0.0, 1.0, POS_INF],
    "minplus": [POS_INF, 0.0, 1.0, 2.5, 7.0],
    "maxmin": [0.0, 2.0, 5.0, 10.0],
    "boolean": [False, True],
    "real_field": [0.0, 0.25, 1.0, -0.5, 2.0],
}


def scalar_samples(name):
    return list(SCALAR_SAMPLES[name])


@pytest.fixture
def rng():
    return random.Random(SEED)


# ------------------------------------------------------- random star-safe data


def star_safe_weight(name, rand):
    """One random arc weight that keeps every cycle weight below one.

    On maxplus that means nonpositive weights, on minplus nonnegative
    ones; maxmin and boolean have total stars, so anything goes.
    Integer-valued floats keep tropical arithmetic exact.
    """
    if name in ("maxplus", "maxplus_complete"):
        return float(rand.randint(-5, 0))
    if name == "minplus":
        return float(rand.randint(0, 6))
    if name == "maxmin":
        return float(rand.randint(0, 10))
    if name == "boolean":
        return True
    raise ValueError(f"no star-safe weight rule for {name}")


def random_stable_matrix(name, n, rand, density=0.6):
    """Random n x n matrix over an idempotent carrier with A* defined."""
    d = descriptor(name)
    zero = d.zero
    data = [[star_safe_weight(name, rand) if rand.random() < density else zero
             for _ in range(n)] for _ in range(n)]
    return Matrix(d, data)


def random_nilpotent_matrix(name, n, rand, lo=1, hi=3, density=0.7):
    """Strictly triangular (under a hidden permutation) integer matrix.

    Nilpotency makes the closure a finite sum of walk products; with
    integer entries those sums are exact in doubles, so even rplus and
    real_field instances can be compared bitwise against enumeration.
    """
    d = descriptor(name)
    order = list(range(n))
    rand.shuffle(order)
    data = [[d.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if order[i] < order[j] and rand.random() < density:
                w = rand.randint(lo, hi)
                if name == "real_field" and rand.random() < 0.5:
                    w = -w
                if w:
                    data[i][j] = float(w)
    return Matrix(d, data)


def random_oracle_matrix(name, n, rand):
    """Stable matrix suited to brute-force walk enumeration, any carrier."""
    if name in ("rplus", "rplus_complete", "real_field"):
        return random_nilpotent_matrix(name, n, rand)
    return random_stable_matrix(name, n, rand)


def random_contraction(n, rand, radius=0.4):
    """Real matrix scaled so its row-sum norm (hence spectral radius)
    is at most ``radius``."""
    d = descriptor("real_field")
    rows = [[rand.uniform(-1.0, 1.0) for _ in range(n)] for _ in range(n)]
    norm = max(sum(abs(v) for v in row) for row in rows)
    scale = radius / norm if norm else 0.0
    return Matrix(d, [[v * scale for v in row] for row in rows])


def random_graph(name, n, rand, density=0.5):
    """Random digraph with star-safe arc weights (absent arcs omitted)."""
    d = descriptor(name)
    arcs = []
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if rand.random() < density:
                w = star_safe_weight(name, rand)
                if not d.is_zero(w):
                    arcs.append((u, v, w))
    return WeightedDigraph(n, tuple(arcs), d)


def random_symmetric_stable_matrix(name, n, rand, density=0.6):
    """Symmetric star-safe matrix for the symmetric factorization tests."""
    d = descriptor(name)
    data = [[d.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            if rand.random() < density:
                w = star_safe_weight(name, rand)
                data[i][j] = w
                data[j][i] = w
    return Matrix(d, data)


def interval_samples(base_name, cap=12):
    """All ordered pairs from the scalar pool, as intervals, capped."""
    base = descriptor(base_name)
    out = []
    pool = scalar_samples(base_name)
    for lo in pool:
        for hi in pool:
            if base.leq(lo, hi):
                out.append(sa.make_interval(base, lo, hi))
    if len(out) > cap:
        step = len(out) / cap
        out = [out[int(k * step)] for k in range(cap)]
    return out


def pair_endpoints(base, lo_matrix, hi_matrix):
    """Zip two base matrices into one interval matrix."""
    lifted = sa.lift_semiring(base)
    data = [[sa.Interval(lo_matrix[i, j], hi_matrix[i, j])
             for j in range(lo_matrix.cols)] for i in range(lo_matrix.rows)]
    return Matrix(lifted, data)


def random_interval_matrix(base_name, n, rand, density=0.6):
    """Interval matrix whose endpoint matrices are each star-safe."""
    base = descriptor(base_name)
    a = random_stable_matrix(base_name, n, rand, density=density)
    b = random_stable_matrix(base_name, n, rand, density=density)
    lo = [[a[i, j] if base.leq(a[i, j], b[i, j]) else b[i, j] for j in range(n)]
          for i in range(n)]
    hi = [[b[i, j] if base.leq(a[i, j], b[i, j]) else a[i, j] for j in range(n)]
          for i in range(n)]
    return pair_endpoints(base, Matrix._wrap(base, lo), Matrix._wrap(base, hi))


# ------------------------------------------------------------ acceptance hook

ACCEPTANCE_LINES = []


def record_acceptance(line):
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
