"""Semiring descriptors and the catalog of shipped instances.

A descriptor bundles the carrier operations of one semiring: ``add``
and ``mul`` with their neutral elements ``zero`` and ``one``, the
(possibly partial) closure ``star``, the canonical partial order
``leq``, an equality predicate ``eq`` with the tolerance appropriate
for the carrier, and ``coerce``, which validates and normalizes a
value into the carrier.  ``fma(acc, x, y)`` computes
``add(acc, mul(x, y))`` in one call; matrix kernels run on it, so the
shipped instances fuse it by hand.  ``fma`` assumes its inputs were
already validated (matrices coerce every entry at construction); the
plain ``add``/``mul`` entry points reject illegal values.

Shipped semirings, by name:

========================  =============================================
rplus                     nonnegative reals, + and *
rplus_complete            rplus with a top element +inf, total star
maxplus                   reals with -inf, max and +
maxplus_complete          maxplus with +inf adjoined, total star
minplus                   reals with +inf, min and +
maxmin                    interval [a, b] of reals, max and min
boolean                   {false, true}, or and and
real_field                all reals, + and *; star is (1 - x)^-1
========================  =============================================
"""

import math
from dataclasses import dataclass
from typing import Callable

from .errors import IllegalElement, InvalidBounds, StarUndefined, UnknownSemiring
from .scalars import NEG_INF, POS_INF, Infinity, usual_leq

__all__ = ["SemiringFlags", "SemiringDescriptor", "make_semiring"]


@dataclass(frozen=True)
class SemiringFlags:
    idempotent: bool
    complete: bool
    commutative_mul: bool
    positive: bool


@dataclass(frozen=True, eq=False, repr=False)
class SemiringDescriptor:
    name: str
    zero: object
    one: object
    add: Callable
    mul: Callable
    star: Callable
    leq: Callable
    eq: Callable
    coerce: Callable
    fma: Callable
    flags: SemiringFlags
    params: tuple = ()
    base: "SemiringDescriptor | None" = None

    @property
    def label(self) -> str:
        if self.base is not None:
            return f"interval({self.base.label})"
        if self.params:
            lo, hi = self.params
            return f"{self.name}[{lo},{hi}]"
        return self.name

    def is_zero(self, v) -> bool:
        return v is self.zero or v == self.zero

    def __repr__(self):
        return f"<semiring {self.label}>"


def same_descriptor(a: SemiringDescriptor, b: SemiringDescriptor) -> bool:
    if a is b:
        return True
    if a.name != b.name or a.params != b.params:
        return False
    if (a.base is None) != (b.base is None):
        return False
    return a.base is None or same_descriptor(a.base, b.base)


def _finite(v, name):
    t = type(v)
    if t is float:
        if math.isfinite(v):
            return v
        raise IllegalElement(f"IEEE {v!r} is not a {name} element; use the infinity tags")
    if t is int:
        return float(v)
    raise IllegalElement(f"{v!r} is not a {name} element")


def _eq_exact(x, y):
    if x is y:
        return True
    if isinstance(x, Infinity) or isinstance(y, Infinity):
        return False
    return x == y


def _eq_close(x, y):
    if x is y:
        return True
    if isinstance(x, Infinity) or isinstance(y, Infinity):
        return False
    return math.isclose(x, y, rel_tol=1e-9, abs_tol=1e-9)


def _compose_fma(add, mul):
    def fma(acc, x, y):
        return add(acc, mul(x, y))
    return fma


def _make_maxplus(complete: bool) -> SemiringDescriptor:
    name = "maxplus_complete" if complete else "maxplus"

    def coerce(v):
        if v is NEG_INF:
            return v
        if v is POS_INF:
            if complete:
                return v
            raise IllegalElement(f"inf is not a {name} element")
        return _finite(v, name)

    def add(x, y):
        if type(x) is float and type(y) is float \
                and math.isfinite(x) and math.isfinite(y):
            return x if x >= y else y
        x = coerce(x)
        y = coerce(y)
        if x is NEG_INF:
            return y
        if y is NEG_INF:
            return x
        if x is POS_INF or y is POS_INF:
            return POS_INF
        return x if x >= y else y

    def mul(x, y):
        if type(x) is float and type(y) is float \
                and math.isfinite(x) and math.isfinite(y):
            return x + y
        x = coerce(x)
        y = coerce(y)
        # the bottom tag absorbs even the top one
        if x is NEG_INF or y is NEG_INF:
            return NEG_INF
        if x is POS_INF or y is POS_INF:
            return POS_INF
        return x + y

    def star(x):
        x = coerce(x)
        if x is NEG_INF:
            return 0.0
        if x is POS_INF or x > 0.0:
            if complete:
                return POS_INF
            raise StarUndefined(f"star needs x <= 0 in {name}, got {x!r}", element=x)
        return 0.0

    if complete:
        # the top tag exists here, so IEEE mapping would hit inf - inf
        def fma(acc, x, y):
            if x is NEG_INF or y is NEG_INF:
                return acc
            try:
                s = x + y
                return acc if acc >= s else s
            except TypeError:
                return add(acc, mul(x, y))
    else:
        # a factor equal to the bottom tag annihilates the product, and the
        # bottom tag is the only non-float here, so after the identity test
        # only acc can still be a tag; it maps to IEEE -inf for comparison
        def fma(acc, x, y, _ninf=float("-inf")):
            if x is NEG_INF or y is NEG_INF:
                return acc
            try:
                s = x + y
                return acc if acc >= s else s
            except TypeError:
                s = x + y if type(x) is float and type(y) is float else _ninf
                if (acc if type(acc) is float else _ninf) >= s:
                    return acc
                return s

    return SemiringDescriptor(
        name=name, zero=NEG_INF, one=0.0,
        add=add, mul=mul, star=star, leq=usual_leq, eq=_eq_exact,
        coerce=coerce, fma=fma,
        flags=SemiringFlags(idempotent=True, complete=complete,
                            commutative_mul=True, positive=True))


def _make_minplus() -> SemiringDescriptor:
    name = "minplus"

    def coerce(v):
        if v is POS_INF:
            return v
        if v is NEG_INF:
            raise IllegalElement(f"-inf is not a {name} element")
        return _finite(v, name)

    def add(x, y):
        if type(x) is float and type(y) is float \
                and math.isfinite(x) and math.isfinite(y):
            return x if x <= y else y
        x = coerce(x)
        y = coerce(y)
        if x is POS_INF:
            return y
        if y is POS_INF:
            return x
        return x if x <= y else y

    def mul(x, y):
        if type(x) is float and type(y) is float \
                and math.isfinite(x) and math.isfinite(y):
            return x + y
        x = coerce(x)
        y = coerce(y)
        if x is POS_INF or y is POS_INF:
            return POS_INF
        return x + y

    def star(x):
        x = coerce(x)
        if x is POS_INF or x >= 0.0:
            return 0.0
        raise StarUndefined(f"star needs x >= 0 in {name}, got {x!r}", element=x)

    def leq(x, y):
        # canonical order: zero = +inf sits at the bottom
        return usual_leq(y, x)

    def fma(acc, x, y, _pinf=float("inf")):
        # a factor equal to the bottom tag annihilates the product, and the
        # bottom tag is the only non-float here, so after the identity test
        # only acc can still be a tag; it maps to IEEE +inf for comparison
        if x is POS_INF or y is POS_INF:
            return acc
        try:
            s = x + y
            return acc if acc <= s else s
        except TypeError:
            s = x + y if type(x) is float and type(y) is float else _pinf
            if (acc if type(acc) is float else _pinf) <= s:
                return acc
            return s

    return SemiringDescriptor(
        name=name, zero=POS_INF, one=0.0,
        add=add, mul=mul, star=star, leq=leq, eq=_eq_exact,
        coerce=coerce, fma=fma,
        flags=SemiringFlags(idempotent=True, complete=False,
                            commutative_mul=True, positive=True))


def _make_maxmin(lo, hi) -> SemiringDescriptor:
    name = "maxmin"
    flo = lo if isinstance(lo, Infinity) else float(lo)
    fhi = hi if isinstance(hi, Infinity) else float(hi)
    # IEEE infinities serve only as comparison sentinels for the fast path
    _clo = float("-inf") if flo is NEG_INF else flo
    _chi = float("inf") if fhi is POS_INF else fhi

    def coerce(v):
        if isinstance(v, Infinity):
            if v is flo or v is fhi:
                return v
            raise IllegalElement(f"{v!r} is outside [{flo},{fhi}]")
        v = _finite(v, name)
        if usual_leq(flo, v) and usual_leq(v, fhi):
            return v
        raise IllegalElement(f"{v!r} is outside [{flo},{fhi}]")

    def add(x, y):
        if type(x) is float and type(y) is float \
                and _clo <= x <= _chi and _clo <= y <= _chi:
            return x if x >= y else y
        x = coerce(x)
        y = coerce(y)
        return y if usual_leq(x, y) else x

    def mul(x, y):
        if type(x) is float and type(y) is float \
                and _clo <= x <= _chi and _clo <= y <= _chi:
            return x if x <= y else y
        x = coerce(x)
        y = coerce(y)
        return x if usual_leq(x, y) else y

    def star(x):
        coerce(x)
        return fhi

    def fma(acc, x, y):
        try:
            s = x if x <= y else y
            return acc if s <= acc else s
        except TypeError:
            m = x if usual_leq(x, y) else y
            return m if usual_leq(acc, m) else acc

    return SemiringDescriptor(
        name=name, zero=flo, one=fhi,
        add=add, mul=mul, star=star, leq=usual_leq, eq=_eq_exact,
        coerce=coerce, fma=fma, params=(flo, fhi),
        flags=SemiringFlags(idempotent=True, complete=True,
                            commutative_mul=True, positive=True))


def _make_boolean() -> SemiringDescriptor:
    def coerce(v):
        if type(v) is bool:
            return v
        raise IllegalElement(f"{v!r} is not a boolean element")

    def add(x, y):
        return coerce(x) or coerce(y)

    def mul(x, y):
        return coerce(x) and coerce(y)

    def star(x):
        coerce(x)
        return True

    def leq(x, y):
        return y or not x

    def fma(acc, x, y):
        return acc or (x and y)

    return SemiringDescriptor(
        name="boolean", zero=False, one=True,
        add=add, mul=mul, star=star, leq=leq, eq=_eq_exact,
        coerce=coerce, fma=fma,
        flags=SemiringFlags(idempotent=True, complete=True,
                            commutative_mul=True, positive=True))


def _make_rplus(complete: bool) -> SemiringDescriptor:
    name = "rplus_complete" if complete else "rplus"

    def coerce(v):
        if v is POS_INF:
            if complete:
                return v
            raise IllegalElement(f"inf is not a {name} element")
        if v is NEG_INF:
            raise IllegalElement(f"-inf is not a {name} element")
        v = _finite(v, name)
        if v < 0.0:
            raise IllegalElement(f"{v!r} is negative, not a {name} element")
        return v

    def add(x, y):
        if type(x) is float and type(y) is float \
                and 0.0 <= x < _HUGE and 0.0 <= y < _HUGE:
            return x + y
        x = coerce(x)
        y = coerce(y)
        if x is POS_INF or y is POS_INF:
            return POS_INF
        return x + y

    def mul(x, y):
        if type(x) is float and type(y) is float \
                and 0.0 <= x < _HUGE and 0.0 <= y < _HUGE:
            return x * y
        x = coerce(x)
        y = coerce(y)
        if x is POS_INF:
            return 0.0 if y == 0.0 else POS_INF
        if y is POS_INF:
            return 0.0 if x == 0.0 else POS_INF
        return x * y

    def star(x):
        x = coerce(x)
        if x is not POS_INF and x < 1.0:
            return 1.0 / (1.0 - x)
        if complete:
            return POS_INF
        raise StarUndefined(f"star needs x < 1 in {name}, got {x!r}", element=x)

    def fma(acc, x, y):
        try:
            return acc + x * y
        except TypeError:
            return add(acc, mul(x, y))

    return SemiringDescriptor(
        name=name, zero=0.0, one=1.0,
        add=add, mul=mul, star=star, leq=usual_leq, eq=_eq_close,
        coerce=coerce, fma=fma,
        flags=SemiringFlags(idempotent=False, complete=complete,
                            commutative_mul=True, positive=True))


def _make_real_field() -> SemiringDescriptor:
    name = "real_field"

    def coerce(v):
        return _finite(v, name)

    def add(x, y):
        if type(x) is float and type(y) is float \
                and math.isfinite(x) and math.isfinite(y):
            return x + y
        return coerce(x) + coerce(y)

    def mul(x, y):
        if type(x) is float and type(y) is float \
                and math.isfinite(x) and math.isfinite(y):
            return x * y
        return coerce(x) * coerce(y)

    def star(x):
        x = coerce(x)
        if x == 1.0:
            raise StarUndefined(f"star of 1 does not exist in {name}", element=x)
        return 1.0 / (1.0 - x)

    def fma(acc, x, y):
        try:
            return acc + x * y
        except TypeError:
            return add(acc, mul(x, y))

    return SemiringDescriptor(
        name=name, zero=0.0, one=1.0,
        add=add, mul=mul, star=star, leq=usual_leq, eq=_eq_close,
        coerce=coerce, fma=fma,
        flags=SemiringFlags(idempotent=False, complete=False,
                            commutative_mul=True, positive=False))


_HUGE = float("inf")

_CATALOG = {
    "rplus": lambda: _make_rplus(False),
    "rplus_complete": lambda: _make_rplus(True),
    "maxplus": lambda: _make_maxplus(False),
    "maxplus_complete": lambda: _make_maxplus(True),
    "minplus": _make_minplus,
    "boolean": _make_boolean,
    "real_field": _make_real_field,
}

_cache: dict = {}


def _norm_bound(v):
    if isinstance(v, Infinity):
        return v
    if isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v):
        return float(v)
    raise InvalidBounds(f"bad bound {v!r}: need a finite number or an infinity tag")


def make_semiring(name: str, bounds=None) -> SemiringDescriptor:
    """Return the cached descriptor for a catalog semiring.

    ``bounds`` is the pair (a, b) for ``maxmin`` and must satisfy a < b;
    all other names take no bounds.
    """
    if name == "maxmin":
        if bounds is None:
            raise InvalidBounds("maxmin needs bounds (a, b)")
        pair = tuple(bounds)
        if len(pair) != 2:
            raise InvalidBounds(f"need exactly two bounds, got {len(pair)}")
        a, b = (_norm_bound(v) for v in pair)
        if not usual_leq(a, b) or a is b or a == b:
            raise InvalidBounds(f"need a < b, got [{a},{b}]")
        key = ("maxmin", a if isinstance(a, Infinity) else float(a),
               b if isinstance(b, Infinity) else float(b))
        if key not in _cache:
            _cache[key] = _make_maxmin(a, b)
        return _cache[key]
    if bounds is not None:
        raise InvalidBounds(f"{name} does not take bounds")
    try:
        builder = _CATALOG[name]
    except KeyError:
        raise UnknownSemiring(
            f"unknown semiring {name!r}; known: "
            + ", ".join(sorted([*_CATALOG, "maxmin"]))) from None
    if name not in _cache:
        _cache[name] = builder()
    return _cache[name]
