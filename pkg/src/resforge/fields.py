"""Exact arithmetic for finite residue fields F_q, q = p^f.

Elements are encoded as integers in [0, q): the integer sum(c_i * p**i)
stands for the class of sum(c_i * x**i) in F_p[x]/(poly).  For prime
fields (f = 1) this is the usual representative in [0, p).

Every context fixes a canonical defining polynomial (the first monic
irreducible of degree f in encoding order) and a canonical generator of
the multiplicative group (the least encoding of order q - 1).  Discrete
logarithms, and with them the exponent encoding of roots of unity, are
therefore reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import EnumerationBound


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def distinct_prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over F_p; polynomials are lists, lowest degree first


def _poly_reduce(r: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    # mod is monic of degree d = len(mod) - 1
    d = len(mod) - 1
    r = list(r)
    for k in range(len(r) - 1, d - 1, -1):
        c = r[k]
        if c:
            r[k] = 0
            for i in range(d):
                r[k - d + i] = (r[k - d + i] - c * mod[i]) % p
    r = r[:d]
    r += [0] * (d - len(r))
    return r


def _poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_reduce(res, mod, p)


def _poly_frobenius(a, mod, p, times=1):
    # a -> a^(p^times) mod (mod, p)
    for _ in range(times):
        acc = [1] + [0] * (len(mod) - 2)
        base = list(a)
        e = p
        while e:
            if e & 1:
                acc = _poly_mulmod(acc, base, mod, p)
            base = _poly_mulmod(base, base, mod, p)
            e >>= 1
        a = acc
    return a


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)

    def trim(u):
        while u and u[-1] == 0:
            u.pop()
        return u

    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], p - 2, p) if p > 2 else b[-1]
        # reduce a mod b
        while len(a) >= len(b) and a:
            c = (a[-1] * inv) % p
            off = len(a) - len(b)
            for i, bi in enumerate(b):
                a[off + i] = (a[off + i] - c * bi) % p
            a = trim(a)
        a, b = b, a
    return a


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    # Rabin's test for a monic polynomial of degree f over F_p.
    f = len(poly) - 1
    x = [0, 1] + [0] * (f - 2) if f >= 2 else [0, 1]
    x = x[:f] if f >= 2 else [0]
    if f == 1:
        return True
    xq = _poly_frobenius(x, poly, p, times=f)
    if xq != x:
        return False
    for ell in distinct_prime_factors(f):
        t = _poly_frobenius(x, poly, p, times=f // ell)
        diff = [(ti - xi) % p for ti, xi in zip(t, x)]
        g = _poly_gcd(diff, list(poly), p)
        if len(g) != 1:
            return False
    return True


def canonical_defining_poly(p: int, f: int) -> tuple[int, ...]:
    """First monic irreducible of degree f in encoding order.

    Candidate m encodes the non-leading coefficients in base p, constant
    term least significant; the polynomial is x^f + sum(c_i x^i).
    """
    for m in range(p**f):
        coeffs = []
        t = m
        for _ in range(f):
            coeffs.append(t % p)
            t //= p
        poly = tuple(coeffs) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise ArithmeticError("no irreducible polynomial found")  # unreachable


def perm_sign_of_map(images: list[int]) -> int:
    """Sign of the permutation i -> images[i] via cycle parity."""
    n = len(images)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------


class FieldCtx:
    """The field F_q = F_p[x]/(poly) with a fixed generator of F_q^x."""

    __slots__ = ("p", "f", "q", "poly", "g", "_dlog")

    def __init__(self, p: int, f: int, poly, g: int):
        self.p = p
        self.f = f
        self.q = p**f
        self.poly = poly  # None for f == 1
        self.g = g
        self._dlog: dict[int, dict[int, int]] = {}

    def __repr__(self):
        return f"FieldCtx(q={self.q})" if self.f > 1 else f"FieldCtx(p={self.p})"

    # encoding ------------------------------------------------------------

    def decode(self, a: int) -> list[int]:
        p = self.p
        return [(a // p**i) % p for i in range(self.f)]

    def encode(self, coeffs) -> int:
        p = self.p
        return sum((c % p) * p**i for i, c in enumerate(coeffs))

    def elements(self):
        return range(self.q)

    # arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        p = self.p
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a: int) -> int:
        if self.f == 1:
            return (-a) % self.p
        return self.encode([-x for x in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a * b) % self.p
        r = _poly_mulmod(self.decode(a), self.decode(b), self.poly, self.p)
        return self.encode(r)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        if self.f == 1:
            return pow(a, e, self.p)
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        if self.f == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)


_FIELD_CACHE: dict[tuple[int, int], FieldCtx] = {}


def field_make(p: int, f: int = 1, max_q: int = 1_000_000) -> FieldCtx:
    """Build the canonical context for F_{p^f}."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f < 1:
        raise ValueError("extension degree must be >= 1")
    if p**f > max_q:
        raise EnumerationBound(f"q = {p}^{f} exceeds the bound {max_q}")
    key = (p, f)
    ctx = _FIELD_CACHE.get(key)
    if ctx is not None:
        return ctx
    poly = canonical_defining_poly(p, f) if f > 1 else None
    ctx = FieldCtx(p, f, poly, g=1)
    q = ctx.q
    if q == 2:
        g = 1
    else:
        factors = distinct_prime_factors(q - 1)
        g = None
        for cand in range(2, q):
            if all(ctx.pow(cand, (q - 1) // ell) != 1 for ell in factors):
                g = cand
                break
        if g is None:
            raise ArithmeticError("no generator found")  # unreachable
    ctx.g = g
    _FIELD_CACHE[key] = ctx
    return ctx


# ---------------------------------------------------------------------------
# roots of unity


@dataclass(frozen=True)
class MuScalar:
    """A root of unity written as an exponent: (n, e) stands for zeta_n**e."""

    n: int
    exp: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "exp", self.exp % self.n)

    def __mul__(self, other: "MuScalar") -> "MuScalar":
        if self.n != other.n:
            raise ValueError("mismatched root-of-unity orders")
        return MuScalar(self.n, self.exp + other.exp)

    def inverse(self) -> "MuScalar":
        return MuScalar(self.n, -self.exp)

    def __pow__(self, k: int) -> "MuScalar":
        return MuScalar(self.n, self.exp * k)

    @property
    def is_identity(self) -> bool:
        return self.exp == 0

    def __repr__(self):
        return f"zeta_{self.n}^{self.exp}"


def _check_n(ctx: FieldCtx, n: int):
    if n < 1 or (ctx.q - 1) % n != 0:
        raise ValueError(f"n = {n} does not divide q - 1 = {ctx.q - 1}")


def mu_embed(ctx: FieldCtx, s: MuScalar) -> int:
    """The field element zeta_n**exp, zeta_n = g^((q-1)/n)."""
    _check_n(ctx, s.n)
    zeta = ctx.pow(ctx.g, (ctx.q - 1) // s.n)
    return ctx.pow(zeta, s.exp)


def mu_dlog(ctx: FieldCtx, x: int, n: int) -> MuScalar:
    """Inverse of mu_embed on the n-torsion of F_q^x."""
    _check_n(ctx, n)
    table = ctx._dlog.get(n)
    if table is None:
        zeta = ctx.pow(ctx.g, (ctx.q - 1) // n)
        table = {}
        y = 1
        for e in range(n):
            table[y] = e
            y = ctx.mul(y, zeta)
        ctx._dlog[n] = table
    try:
        return MuScalar(n, table[x])
    except KeyError:
        raise ValueError(f"{x} is not an n-th root of unity (n = {n})") from None


def power_residue_char(ctx: FieldCtx, x: int, n: int) -> MuScalar:
    """x -> x^((q-1)/n), the surjection F_q^x -> mu_n."""
    _check_n(ctx, n)
    if x == 0:
        raise ValueError("power residue character of 0")
    return mu_dlog(ctx, ctx.pow(x, (ctx.q - 1) // n), n)


def zolotarev_sign(ctx: FieldCtx, a: int) -> int:
    """Sign of the permutation x -> a*x of F_q."""
    if a == 0:
        raise ValueError("multiplication by 0 is not a permutation")
    return perm_sign_of_map([ctx.mul(a, x) for x in range(ctx.q)])


# ---------------------------------------------------------------------------
# towers F_{q^d} / F_q and the multiplication-matrix norm

_EXT_CACHE: dict[tuple[int, int, int], tuple] = {}


def extension_field(base: FieldCtx, d: int, max_size: int = 4096):
    """The field F_{q^d} together with the canonical embedding of F_q.

    Returns (big, embed) where embed maps base encodings to big encodings.
    The embedding sends x to base.poly's least root in the big field; for
    a prime base it is the identity on [0, p).
    """
    if base.q**d > max_size:
        raise EnumerationBound("extension field too large to enumerate")
    key = (base.p, base.f, d)
    hit = _EXT_CACHE.get(key)
    if hit is not None:
        return hit[0], hit[1]
    big = field_make(base.p, base.f * d)
    if base.f == 1:
        embed = {c: c for c in range(base.p)}
    else:
        coeffs = list(base.poly)
        roots = []
        for y in big.elements():
            acc = 0
            for c in reversed(coeffs):
                acc = big.add(big.mul(acc, y), c)
            if acc == 0:
                roots.append(y)
        r = min(roots)
        embed = {}
        for x in base.elements():
            acc = 0
            for c in reversed(base.decode(x)):
                acc = big.add(big.mul(acc, r), c)
            embed[x] = acc
    _EXT_CACHE[key] = (big, embed, None)
    return big, embed


def _tower_coords(base: FieldCtx, d: int):
    # coordinate table of F_{q^d} in the F_q-basis 1, G, ..., G^(d-1)
    key = (base.p, base.f, d)
    big, embed = extension_field(base, d)
    entry = _EXT_CACHE[key]
    if entry[2] is not None:
        return big, embed, entry[2][0], entry[2][1]
    gpow = [1]
    for _ in range(d - 1):
        gpow.append(big.mul(gpow[-1], big.g))
    table = {}
    for c in product(range(base.q), repeat=d):
        acc = 0
        for ci, gi in zip(c, gpow):
            acc = big.add(acc, big.mul(embed[ci], gi))
        table[acc] = c
    if len(table) != big.q:
        raise ArithmeticError("generator powers do not form a basis")
    _EXT_CACHE[key] = (big, embed, (table, gpow))
    return big, embed, table, gpow


def field_det(ctx: FieldCtx, rows: list[list[int]]) -> int:
    """Determinant over F_q by Gaussian elimination."""
    m = len(rows)
    a = [list(r) for r in rows]
    det = 1
    for c in range(m):
        piv = next((r for r in range(c, m) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = ctx.neg(det)
        det = ctx.mul(det, a[c][c])
        inv = ctx.inv(a[c][c])
        for r in range(c + 1, m):
            if a[r][c]:
                fac = ctx.mul(a[r][c], inv)
                for k in range(c, m):
                    a[r][k] = ctx.sub(a[r][k], ctx.mul(fac, a[c][k]))
    return det


def norm_check(base: FieldCtx, d: int, x: int) -> int:
    """Determinant over F_q of multiplication by x on F_{q^d}.

    x is given in the encoding of the extension field returned by
    extension_field(base, d).  The value is pulled back to a base-field
    encoding; it equals x^((q^d - 1)/(q - 1)).
    """
    big, embed, table, gpow = _tower_coords(base, d)
    cols = [table[big.mul(x, gj)] for gj in gpow]
    rows = [[cols[j][i] for j in range(d)] for i in range(d)]
    return field_det(base, rows)
