"""Elements of K^x for K the unramified extension of Q_p of degree f.

A nonzero element is stored as pi^val * unit with the unit kept in
O/pi^N; the precision N is tracked explicitly and operations fail loudly
when cancellation exhausts it, rather than truncating silently.

Input grammar (shared with the command line):
    "42", "-3", "9/35"            rationals; the valuation is extracted
    "pi", "pi^3", "pi^-2"         powers of the uniformiser
    "pi^2*5", "pi^-1*3/4"         pi-power times a rational
    "[c0,c1,...]"                 for f > 1: unit with the given residue
                                  coefficients (integers, lifted exactly)
    "pi^2*[1,2]"                  combined form
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import PrecisionError
from .fields import FieldCtx, field_make
from .rings import RingCtx, ring_make


def _vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class KElem:
    """pi^val * unit at precision N; the unit is invertible mod pi."""

    __slots__ = ("lf", "val", "unit", "prec")

    def __init__(self, lf: "LocalField", val: int, unit: int, prec: int):
        ring = lf.ring(prec)
        if ring.val(unit) != 0:
            raise PrecisionError("unit part is divisible by pi (or 0) at this precision")
        self.lf = lf
        self.val = val
        self.unit = unit
        self.prec = prec

    # group operations ------------------------------------------------------

    def __mul__(self, other: "KElem") -> "KElem":
        self._same_field(other)
        prec = min(self.prec, other.prec)
        ring = self.lf.ring(prec)
        u = ring.mul(self._unit_at(prec), other._unit_at(prec))
        return KElem(self.lf, self.val + other.val, u, prec)

    def inverse(self) -> "KElem":
        ring = self.lf.ring(self.prec)
        return KElem(self.lf, -self.val, ring.inv(self.unit), self.prec)

    def __pow__(self, e: int) -> "KElem":
        if e == 0:
            return self.lf.one(self.prec)
        base = self if e > 0 else self.inverse()
        e = abs(e)
        ring = self.lf.ring(base.prec)
        return KElem(self.lf, base.val * e, ring.pow(base.unit, e), base.prec)

    def __neg__(self) -> "KElem":
        ring = self.lf.ring(self.prec)
        return KElem(self.lf, self.val, ring.neg(self.unit), self.prec)

    def reduce_mod_pi(self) -> int:
        """Residue of a unit; valuation must be zero."""
        if self.val != 0:
            raise ValueError(f"cannot reduce mod pi: valuation is {self.val}")
        return self.lf.ring(self.prec).reduce_to_field(self.unit)

    # helpers ----------------------------------------------------------------

    def _same_field(self, other: "KElem"):
        if self.lf is not other.lf:
            raise ValueError("elements of different fields")

    def _unit_at(self, prec: int) -> int:
        if prec == self.prec:
            return self.unit
        if prec > self.prec:
            raise PrecisionError("requested precision exceeds what is known")
        return self.lf.ring(self.prec).reduce_to(self.unit, self.lf.ring(prec))

    def __eq__(self, other):
        if not isinstance(other, KElem) or self.lf is not other.lf:
            return NotImplemented
        if self.val != other.val:
            return False
        prec = min(self.prec, other.prec)
        return self._unit_at(prec) == other._unit_at(prec)

    def __hash__(self):
        raise TypeError("KElem is not hashable (precision-dependent equality)")

    def as_str(self) -> str:
        ring = self.lf.ring(self.prec)
        u = str(self.unit) if self.lf.f == 1 else "[" + ",".join(map(str, ring.decode(self.unit))) + "]"
        if self.val == 0:
            return u
        return f"pi^{self.val}*{u}"

    def __repr__(self):
        return f"KElem({self.as_str()} : O(pi^{self.val + self.prec}))"


class LocalField:
    """The unramified extension of Q_p with residue field F_{p^f}."""

    def __init__(self, p: int, f: int = 1, default_precision: int = 24,
                 enum_bound: int = 100_000):
        self.field: FieldCtx = field_make(p, f)
        self.p = p
        self.f = f
        self.q = p**f
        self.default_precision = default_precision
        self.enum_bound = enum_bound
        self._rings: dict[int, RingCtx] = {}
        self._engines: dict = {}

    def __repr__(self):
        return f"LocalField(p={self.p}, f={self.f})"

    def ring(self, N: int) -> RingCtx:
        ctx = self._rings.get(N)
        if ctx is None:
            ctx = ring_make(self.field, N)
            self._rings[N] = ctx
        return ctx

    # constructors -----------------------------------------------------------

    def one(self, prec: int | None = None) -> KElem:
        return KElem(self, 0, 1, prec or self.default_precision)

    def pi(self, k: int = 1, prec: int | None = None) -> KElem:
        return KElem(self, k, 1, prec or self.default_precision)

    def from_rational(self, r, prec: int | None = None) -> KElem:
        r = Fraction(r)
        if r == 0:
            raise ValueError("0 is not in K^x")
        prec = prec or self.default_precision
        ring = self.ring(prec)
        vn = _vp(r.numerator, self.p)
        vd = _vp(r.denominator, self.p)
        num = abs(r.numerator) // self.p**vn
        den = r.denominator // self.p**vd
        u = ring.mul(num % ring.pN, ring.inv(den % ring.pN))
        if r.numerator < 0:
            u = ring.neg(u)
        return KElem(self, vn - vd, u, prec)

    def from_coeffs(self, coeffs, prec: int | None = None) -> KElem:
        """Element with the given integer polynomial coefficients, exactly."""
        prec = prec or self.default_precision
        ring = self.ring(prec)
        enc = ring.encode(coeffs)
        v = ring.val(enc)
        if v >= prec:
            raise PrecisionError("coefficient vector vanishes at this precision")
        return KElem(self, v, ring.div_pk(enc, v), prec)

    _PI_RE = re.compile(r"^pi(?:\^(-?\d+))?$")
    _FRAC_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")
    _LIST_RE = re.compile(r"^\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]$")

    def parse(self, text: str, prec: int | None = None) -> KElem:
        """Parse the element grammar described in the module docstring."""
        prec = prec or self.default_precision
        s = text.strip().replace(" ", "")
        vshift = 0
        if s.startswith("pi"):
            head, star, rest = s.partition("*")
            m = self._PI_RE.match(head)
            if not m:
                raise ValueError(f"cannot parse {text!r}")
            vshift = int(m.group(1)) if m.group(1) else 1
            if not star:
                return self.pi(vshift, prec)
            s = rest
        m = self._FRAC_RE.match(s)
        if m:
            num = int(m.group(1))
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise ValueError("zero denominator")
            elem = self.from_rational(Fraction(num, den), prec)
        else:
            m = self._LIST_RE.match(s)
            if m:
                if self.f == 1:
                    raise ValueError("coefficient lists need an extension field (f > 1)")
                coeffs = [int(t) for t in m.group(1).split(",")]
                if len(coeffs) > self.f:
                    raise ValueError(f"at most {self.f} coefficients expected")
                elem = self.from_coeffs(coeffs, prec)
            else:
                raise ValueError(f"cannot parse {text!r}")
        if vshift:
            elem = KElem(self, elem.val + vshift, elem.unit, elem.prec)
        return elem


_LF_CACHE: dict[tuple[int, int], LocalField] = {}


def local_field(p: int, f: int = 1, **kw) -> LocalField:
    """Shared LocalField instances, so engine caches are reused."""
    key = (p, f)
    lf = _LF_CACHE.get(key)
    if lf is None or kw:
        lf = LocalField(p, f, **kw)
        if not kw:
            _LF_CACHE[key] = lf
    return lf


# free-function forms of the group operations ----------------------------------


def k_mul(a: KElem, b: KElem) -> KElem:
    return a * b


def k_inv(a: KElem) -> KElem:
    return a.inverse()


def k_reduce_mod_pi(a: KElem) -> int:
    return a.reduce_mod_pi()


def k_add(a: KElem, b: KElem) -> KElem:
    """Sum in K; fails with PrecisionError if cancellation eats all digits."""
    a._same_field(b)
    v = min(a.val, b.val)
    avail = min(a.val + a.prec, b.val + b.prec) - v
    ring = a.lf.ring(avail)

    def term(x: KElem) -> int:
        # pi^(x.val - v) * unit, valid mod pi^avail since shift + prec >= avail
        u = a.lf.ring(x.prec).lift_naive(x.unit, ring)
        return ring.mul_pk(u, x.val - v)

    s = ring.add(term(a), term(b))
    w = ring.val(s)
    if w >= avail:
        raise PrecisionError("sum is 0 at the available precision")
    return KElem(a.lf, v + w, ring.div_pk(s, w), avail - w)


def k_sub(a: KElem, b: KElem) -> KElem:
    return k_add(a, -b)


def k_one_minus(a: KElem) -> KElem:
    """1 - a, used by Steinberg checks."""
    return k_sub(a.lf.one(a.prec + abs(a.val)), a)
