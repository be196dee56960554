"""Finite O-modules as direct sums of O/pi^e, and O-linear maps.

A module is the list of its elementary divisor exponents (ascending);
elements are tuples of ring encodings, component i living in
O/pi^(e_i).  The group mu_n acts componentwise by the Teichmueller lift
of the canonical zeta_n, which is compatible with every reduction map
between precisions, so quotient maps between modules are automatically
equivariant.

Homomorphisms are stored by the images of the standard generators; the
entry condition v(a_jk) >= e_j - e_k makes the map well defined.
"""

from __future__ import annotations

from itertools import product

from .errors import EnumerationBound
from .fields import MuScalar
from .musets import MuSet, MuSetAut, OrbitView

# views of module element sets, keyed by (p, f, exps, n, rule)
_VIEW_CACHE: dict[tuple, OrbitView] = {}


class FiniteModule:
    """Direct sum of O/pi^(e_i) over the ring of integers of lf."""

    __slots__ = ("lf", "exps", "rings", "size")

    def __init__(self, lf, exps):
        exps = tuple(exps)
        if any(e < 1 for e in exps):
            raise ValueError("exponents must be >= 1")
        if list(exps) != sorted(exps):
            raise ValueError("exponents must be ascending")
        self.lf = lf
        self.exps = exps
        self.rings = tuple(lf.ring(e) for e in exps)
        self.size = lf.q ** sum(exps)

    @property
    def rank(self) -> int:
        return len(self.exps)

    @property
    def key(self):
        return (self.lf.p, self.lf.f, self.exps)

    @property
    def zero(self) -> tuple:
        return (0,) * len(self.exps)

    def __repr__(self):
        body = " + ".join(f"O/pi^{e}" for e in self.exps) or "0"
        return f"FiniteModule({body} over {self.lf!r})"

    def __eq__(self, other):
        return isinstance(other, FiniteModule) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def elements(self):
        if self.size > self.lf.enum_bound:
            raise EnumerationBound(
                f"module of size {self.size} exceeds bound {self.lf.enum_bound}")
        return product(*(range(self.lf.q**e) for e in self.exps))

    def generators(self):
        for k in range(len(self.exps)):
            g = [0] * len(self.exps)
            g[k] = 1
            yield tuple(g)

    def dim(self, n: int) -> int:
        """Number of mu_n orbits off zero: (|T| - 1) / n."""
        return (self.size - 1) // n

    def mu_act(self, n: int):
        zetas = [r.zeta(n) for r in self.rings]
        rings = self.rings

        def act(x):
            return tuple(r.mul(z, c) for r, z, c in zip(rings, zetas, x))

        return act

    def add(self, x, y):
        return tuple(r.add(a, b) for r, a, b in zip(self.rings, x, y))

    def view(self, n: int, rule: str = "least") -> OrbitView:
        key = (*self.key, n, rule)
        v = _VIEW_CACHE.get(key)
        if v is None:
            elems = [x for x in self.elements() if x != self.zero]
            v = OrbitView(n, elems, self.mu_act(n), rule)
            _VIEW_CACHE[key] = v
        return v


class ModuleHom:
    """O-linear map between finite modules, stored by generator images."""

    __slots__ = ("src", "dst", "cols")

    def __init__(self, src: FiniteModule, dst: FiniteModule, cols):
        cols = tuple(tuple(c) for c in cols)
        if len(cols) != src.rank or any(len(c) != dst.rank for c in cols):
            raise ValueError("wrong matrix shape")
        for k, col in enumerate(cols):
            ek = src.exps[k]
            for j, a in enumerate(col):
                need = dst.exps[j] - ek
                if need > 0 and dst.rings[j].val(a) < need:
                    raise ValueError(
                        f"entry ({j},{k}) has valuation < e_j - e_k; map not well defined")
        self.src = src
        self.dst = dst
        self.cols = cols

    def apply(self, x: tuple) -> tuple:
        dst, src = self.dst, self.src
        out = []
        for j in range(dst.rank):
            rj = dst.rings[j]
            acc = 0
            for k in range(src.rank):
                xk = x[k]
                if xk:
                    lifted = src.rings[k].lift_naive(xk, rj)
                    acc = rj.add(acc, rj.mul(lifted, self.cols[k][j]))
            out.append(acc)
        return tuple(out)

    def compose(self, other: "ModuleHom") -> "ModuleHom":
        """self after other."""
        if other.dst != self.src:
            raise ValueError("maps do not compose")
        return ModuleHom(other.src, self.dst,
                         [self.apply(c) for c in other.cols])

    def is_bijective(self) -> bool:
        if self.src.size != self.dst.size:
            return False
        seen = set()
        for x in self.src.elements():
            y = self.apply(x)
            if y in seen:
                return False
            seen.add(y)
        return True

    def __repr__(self):
        return f"ModuleHom({self.src!r} -> {self.dst!r})"


def identity_hom(M: FiniteModule) -> ModuleHom:
    return ModuleHom(M, M, list(M.generators()))


def scalar_hom(M: FiniteModule, u, from_ring=None) -> ModuleHom:
    """Multiplication by u; u is an integer, or an encoding in from_ring."""
    cols = []
    for k in range(M.rank):
        col = [0] * M.rank
        if from_ring is None:
            col[k] = u % M.rings[k].pN if M.lf.f == 1 else M.rings[k].encode([u])
        else:
            col[k] = (from_ring.reduce_to(u, M.rings[k])
                      if from_ring.N >= M.rings[k].N
                      else from_ring.lift_naive(u, M.rings[k]))
        cols.append(tuple(col))
    return ModuleHom(M, M, cols)


# mu_n-set views of modules ------------------------------------------------------


def module_as_muset(T: FiniteModule, n: int, rule: str = "least") -> MuSet:
    """The underlying finite free pointed mu_n-set (orbit count only)."""
    return T.view(n, rule).muset


def module_aut_as_musetaut(T: FiniteModule, g: ModuleHom, n: int,
                           rule: str = "least") -> MuSetAut:
    """Express an O-linear automorphism as (sigma, mu) data."""
    if g.src != T or g.dst != T:
        raise ValueError("not an endomorphism of T")
    return T.view(n, rule).as_aut(g.apply)
