"""Order-interval lift of a positive semiring.

``lift_semiring(base)`` returns a full descriptor whose carrier is the
set of closed intervals [lo, hi] of the base carrier, lo below hi in
the base's canonical order, with every operation applied endpoint by
endpoint.  Positivity of the base makes the endpoint-wise operations
coincide with the set-image operations on intervals, so the lift is
again a semiring and every matrix algorithm runs on it unchanged.

The lifted fused-accumulate is hand-specialized per base family; the
interval variant additionally returns the accumulator object itself
whenever the new term does not move either endpoint, which keeps
closure kernels allocation-free on the (common) dominated updates.
"""

from typing import NamedTuple

from .errors import EmptyInterval, IllegalElement, NotPositive
from .semirings import SemiringDescriptor, SemiringFlags

__all__ = ["Interval", "make_interval", "contains", "lift_semiring"]


class Interval(NamedTuple):
    """Closed interval of a base carrier: all v with lo <= v <= hi."""
    lo: object
    hi: object


def make_interval(base: SemiringDescriptor, lo, hi) -> Interval:
    """Validate endpoints against the base and their mutual order."""
    lo = base.coerce(lo)
    hi = base.coerce(hi)
    if not base.leq(lo, hi):
        raise EmptyInterval(
            f"empty interval over {base.label}: {lo!r} does not precede {hi!r}")
    return Interval(lo, hi)


def contains(base: SemiringDescriptor, iv, v) -> bool:
    """Membership of a base element in the interval, per canonical order."""
    lo, hi = iv
    v = base.coerce(v)
    return base.leq(lo, v) and base.leq(v, hi)


_lift_cache: dict = {}


def lift_semiring(base: SemiringDescriptor) -> SemiringDescriptor:
    """Interval semiring over ``base``; requires a positive base.

    Cached per base descriptor, so repeated lifts share one instance.
    """
    if not base.flags.positive:
        raise NotPositive(
            f"interval lift needs a positive base semiring, got {base.label}")
    lifted = _lift_cache.get(base)
    if lifted is None:
        lifted = _build_lift(base)
        _lift_cache[base] = lifted
    return lifted


def _build_lift(base: SemiringDescriptor) -> SemiringDescriptor:
    badd, bmul, bstar = base.add, base.mul, base.star
    bleq, beq, bcoerce = base.leq, base.eq, base.coerce
    bis_zero = base.is_zero
    label = base.label
    # one canonical zero object, shared by every zero-valued entry, so
    # kernels can recognize it with a single identity test
    zero = Interval(base.zero, base.zero)

    def _canon(lo, hi):
        if bis_zero(lo) and bis_zero(hi):
            return zero
        return Interval(lo, hi)

    def coerce(v):
        if type(v) is Interval:
            lo, hi = v
        elif isinstance(v, (tuple, list)) and len(v) == 2:
            lo, hi = v
        else:
            raise IllegalElement(f"{v!r} is not an interval over {label}")
        lo = bcoerce(lo)
        hi = bcoerce(hi)
        if not bleq(lo, hi):
            raise EmptyInterval(
                f"empty interval over {label}: {lo!r} does not precede {hi!r}")
        return _canon(lo, hi)

    def add(x, y):
        x = coerce(x)
        y = coerce(y)
        return _canon(badd(x[0], y[0]), badd(x[1], y[1]))

    def mul(x, y):
        x = coerce(x)
        y = coerce(y)
        return _canon(bmul(x[0], y[0]), bmul(x[1], y[1]))

    def star(x):
        x = coerce(x)
        # endpoint star keeps the order: star is monotone on its domain
        # in every shipped positive base
        return Interval(bstar(x[0]), bstar(x[1]))

    def leq(x, y):
        return bleq(x[0], y[0]) and bleq(x[1], y[1])

    def eq(x, y):
        return beq(x[0], y[0]) and beq(x[1], y[1])

    fma = _fused_fma(base, _generic_fma(base.fma, zero), zero)

    return SemiringDescriptor(
        name="interval", zero=zero,
        one=Interval(base.one, base.one),
        add=add, mul=mul, star=star, leq=leq, eq=eq,
        coerce=coerce, fma=fma, base=base,
        flags=SemiringFlags(idempotent=base.flags.idempotent,
                            complete=base.flags.complete,
                            commutative_mul=base.flags.commutative_mul,
                            positive=True))


def _generic_fma(bfma, _zero):
    # two base accumulates; handing back acc itself when neither endpoint
    # moved relies on the base fma returning its own acc in that case
    def fma(acc, x, y, _new=tuple.__new__, _I=Interval):
        if x is _zero or y is _zero:
            return acc
        lo = bfma(acc[0], x[0], y[0])
        hi = bfma(acc[1], x[1], y[1])
        if lo is acc[0] and hi is acc[1]:
            return acc
        return _new(_I, (lo, hi))
    return fma


def _fused_fma(base, generic, _zero):
    """Inline accumulate for the numeric bases; tags punt to ``generic``.

    Every kernel opens with an identity test against the canonical zero
    interval: a zero factor annihilates the product, so the accumulator
    comes back untouched without any endpoint arithmetic.
    """
    name = base.name
    if name == "maxplus":
        # tag fallback maps the bottom tag to IEEE -inf; an endpoint that
        # actually moves is strictly above -inf and hence a finite float,
        # while unmoved endpoints reuse acc's objects (tags included)
        def fma(acc, x, y, _new=tuple.__new__, _I=Interval,
                _ninf=float("-inf"), _zero=_zero):
            if x is _zero or y is _zero:
                return acc
            al, ah = acc
            try:
                lo = x[0] + y[0]
                hi = x[1] + y[1]
                if al >= lo:
                    if ah >= hi:
                        return acc
                    lo = al
                elif hi <= ah:
                    hi = ah
                return _new(_I, (lo, hi))
            except TypeError:
                x0, x1 = x
                y0, y1 = y
                lo = (x0 if type(x0) is float else _ninf) \
                    + (y0 if type(y0) is float else _ninf)
                hi = (x1 if type(x1) is float else _ninf) \
                    + (y1 if type(y1) is float else _ninf)
                if (al if type(al) is float else _ninf) >= lo:
                    if (ah if type(ah) is float else _ninf) >= hi:
                        return acc
                    return _new(_I, (al, hi))
                if (ah if type(ah) is float else _ninf) >= hi:
                    return _new(_I, (lo, ah))
                return _new(_I, (lo, hi))
        return fma
    if name == "maxplus_complete":
        def fma(acc, x, y, _new=tuple.__new__, _I=Interval, _zero=_zero):
            if x is _zero or y is _zero:
                return acc
            al, ah = acc
            try:
                lo = x[0] + y[0]
                hi = x[1] + y[1]
                if al >= lo:
                    if ah >= hi:
                        return acc
                    lo = al
                elif hi <= ah:
                    hi = ah
                return _new(_I, (lo, hi))
            except TypeError:
                return generic(acc, x, y)
        return fma
    if name == "minplus":
        # mirror of the maxplus kernel: the bottom tag is +inf
        def fma(acc, x, y, _new=tuple.__new__, _I=Interval,
                _pinf=float("inf"), _zero=_zero):
            if x is _zero or y is _zero:
                return acc
            al, ah = acc
            try:
                lo = x[0] + y[0]
                hi = x[1] + y[1]
                if al <= lo:
                    if ah <= hi:
                        return acc
                    lo = al
                elif hi >= ah:
                    hi = ah
                return _new(_I, (lo, hi))
            except TypeError:
                x0, x1 = x
                y0, y1 = y
                lo = (x0 if type(x0) is float else _pinf) \
                    + (y0 if type(y0) is float else _pinf)
                hi = (x1 if type(x1) is float else _pinf) \
                    + (y1 if type(y1) is float else _pinf)
                if (al if type(al) is float else _pinf) <= lo:
                    if (ah if type(ah) is float else _pinf) <= hi:
                        return acc
                    return _new(_I, (al, hi))
                if (ah if type(ah) is float else _pinf) <= hi:
                    return _new(_I, (lo, ah))
                return _new(_I, (lo, hi))
        return fma
    if name in ("rplus", "rplus_complete"):
        def fma(acc, x, y, _new=tuple.__new__, _I=Interval, _zero=_zero):
            if x is _zero or y is _zero:
                return acc
            try:
                return _new(_I, (acc[0] + x[0] * y[0], acc[1] + x[1] * y[1]))
            except TypeError:
                return generic(acc, x, y)
        return fma
    if name == "maxmin":
        def fma(acc, x, y, _new=tuple.__new__, _I=Interval, _zero=_zero):
            if x is _zero or y is _zero:
                return acc
            al, ah = acc
            try:
                sl = x[0] if x[0] <= y[0] else y[0]
                sh = x[1] if x[1] <= y[1] else y[1]
                lo = al if sl <= al else sl
                hi = ah if sh <= ah else sh
            except TypeError:
                return generic(acc, x, y)
            if lo is al and hi is ah:
                return acc
            return _new(_I, (lo, hi))
        return fma
    if name == "boolean":
        def fma(acc, x, y, _new=tuple.__new__, _I=Interval, _zero=_zero):
            if x is _zero or y is _zero:
                return acc
            lo = acc[0] or (x[0] and y[0])
            hi = acc[1] or (x[1] and y[1])
            if lo is acc[0] and hi is acc[1]:
                return acc
            return _new(_I, (lo, hi))
        return fma
    return generic
