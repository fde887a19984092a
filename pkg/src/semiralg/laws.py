"""Checkable semiring laws.

Each function probes one family of axioms on concrete sample values
and returns a list of human-readable violations (empty means the law
held on every probe).  The test suite drives these over all shipped
descriptors and over interval lifts; they are exported so users can
vet hand-built descriptors the same way.
"""

from itertools import product

from .errors import StarUndefined

__all__ = ["semiring_axioms", "idempotency_axioms", "positivity_axioms",
           "star_axioms", "fused_accumulate_matches", "all_violations"]


def semiring_axioms(d, samples):
    """Associativity, commutativity of add, distributivity, neutrality."""
    out = []
    add, mul, eq = d.add, d.mul, d.eq
    zero, one = d.zero, d.one
    if eq(zero, one):
        out.append("zero equals one")
    for x in samples:
        if not eq(add(x, zero), x):
            out.append(f"x + 0 != x for {x!r}")
        if not eq(mul(x, one), x) or not eq(mul(one, x), x):
            out.append(f"1 * x != x for {x!r}")
        if not eq(mul(x, zero), zero) or not eq(mul(zero, x), zero):
            out.append(f"0 does not absorb {x!r}")
    for x, y in product(samples, repeat=2):
        if not eq(add(x, y), add(y, x)):
            out.append(f"add not commutative on {x!r}, {y!r}")
        if d.flags.commutative_mul and not eq(mul(x, y), mul(y, x)):
            out.append(f"mul not commutative on {x!r}, {y!r}")
    for x, y, z in product(samples, repeat=3):
        if not eq(add(add(x, y), z), add(x, add(y, z))):
            out.append(f"add not associative on {x!r}, {y!r}, {z!r}")
        if not eq(mul(mul(x, y), z), mul(x, mul(y, z))):
            out.append(f"mul not associative on {x!r}, {y!r}, {z!r}")
        if not eq(mul(x, add(y, z)), add(mul(x, y), mul(x, z))):
            out.append(f"left distributivity fails on {x!r}, {y!r}, {z!r}")
        if not eq(mul(add(x, y), z), add(mul(x, z), mul(y, z))):
            out.append(f"right distributivity fails on {x!r}, {y!r}, {z!r}")
    return out


def idempotency_axioms(d, samples):
    """x + x = x, and leq coincides with the canonical order."""
    out = []
    for x in samples:
        if not d.eq(d.add(x, x), x):
            out.append(f"x + x != x for {x!r}")
    for x, y in product(samples, repeat=2):
        canonical = d.eq(d.add(x, y), y)
        if d.leq(x, y) != canonical:
            out.append(f"leq disagrees with canonical order on {x!r}, {y!r}")
    return out


def positivity_axioms(d, samples):
    """zero is least; add and mul are monotone in both arguments."""
    out = []
    leq, add, mul = d.leq, d.add, d.mul
    for x in samples:
        if not leq(d.zero, x):
            out.append(f"zero not below {x!r}")
    for x, y in product(samples, repeat=2):
        if not leq(x, add(x, y)):
            out.append(f"x not below x + y for {x!r}, {y!r}")
    for x, y, z in product(samples, repeat=3):
        if leq(x, y):
            if not leq(add(x, z), add(y, z)):
                out.append(f"add not monotone on {x!r} <= {y!r} with {z!r}")
            if not leq(mul(x, z), mul(y, z)) or not leq(mul(z, x), mul(z, y)):
                out.append(f"mul not monotone on {x!r} <= {y!r} with {z!r}")
    return out


def star_axioms(d, samples, series_terms=20):
    """x* = 1 + x*x = 1 + xx* where defined; partial sums stay below x*.

    Partial sums of 1 + x + x^2 + ... are compared against x* for the
    first ``series_terms`` powers; on idempotent carriers with x <= 1
    the very first partial sum must already equal x*.  The partial-sum
    bound is a theorem only on positive carriers (unroll the star axiom
    and drop the tail), so it is probed only when the positive flag is
    set; on unordered carriers partial sums may overshoot the limit.
    """
    out = []
    add, mul, eq, leq = d.add, d.mul, d.eq, d.leq
    if not eq(d.star(d.zero), d.one):
        out.append("star(zero) != one")
    for x in samples:
        try:
            s = d.star(x)
        except StarUndefined:
            continue
        if not eq(s, add(d.one, mul(s, x))):
            out.append(f"x* != 1 + x*x for {x!r}")
        if not eq(s, add(d.one, mul(x, s))):
            out.append(f"x* != 1 + xx* for {x!r}")
        if d.flags.positive:
            partial, power = d.one, d.one
            for k in range(series_terms):
                if not leq(partial, s):
                    out.append(f"partial sum {k} exceeds star for {x!r}")
                    break
                power = mul(power, x)
                partial = add(partial, power)
        if d.flags.idempotent and leq(x, d.one) and not eq(s, d.one):
            out.append(f"star of {x!r} <= 1 is not 1 on idempotent carrier")
    return out


def fused_accumulate_matches(d, samples):
    """fma(acc, x, y) must equal add(acc, mul(x, y)) on every probe."""
    out = []
    for acc, x, y in product(samples, repeat=3):
        if not d.eq(d.fma(acc, x, y), d.add(acc, d.mul(x, y))):
            out.append(f"fma diverges from add/mul on {acc!r}, {x!r}, {y!r}")
    return out


def all_violations(d, samples):
    """Run every law family that applies to the descriptor's flags."""
    out = semiring_axioms(d, samples)
    if d.flags.idempotent:
        out += idempotency_axioms(d, samples)
    if d.flags.positive:
        out += positivity_axioms(d, samples)
    out += star_axioms(d, samples)
    out += fused_accumulate_matches(d, samples)
    return out
