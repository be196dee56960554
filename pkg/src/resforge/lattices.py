"""Full-rank O-lattices in K^m and their finite quotients.

Matrices over K are stored as pi^shift times an integral matrix whose
entries live in O/pi^prec; prec counts the pi-digits that are actually
known.  Reductions never happen silently: any pivot or determinant whose
valuation cannot be separated from the known digits raises
PrecisionError instead of guessing.

A Lattice always normalizes its basis to the canonical column Hermite
form (lower triangular, diagonal pi^e, entries to the left of a pivot
reduced mod that pivot).  This makes every downstream construction a
function of the lattice as a subset of K^m, not of the basis that
happened to produce it: quotient presentations, and with them the pinned
base points of determinant lines, are reproducible.

Smith normal form over O uses the minimal-valuation pivot, ties broken
by row then column.
"""

from __future__ import annotations

from .errors import PrecisionError
from .modules import FiniteModule, ModuleHom
from .padic import KElem, LocalField


class KMat:
    """pi^shift times an integral matrix with entries in O/pi^prec."""

    __slots__ = ("lf", "nrows", "ncols", "shift", "prec", "data")

    def __init__(self, lf: LocalField, data, shift: int = 0, prec: int | None = None):
        self.lf = lf
        self.data = [list(row) for row in data]
        self.nrows = len(self.data)
        self.ncols = len(self.data[0]) if self.data else 0
        if any(len(r) != self.ncols for r in self.data):
            raise ValueError("ragged matrix")
        self.shift = shift
        self.prec = prec if prec is not None else lf.default_precision

    # construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, lf: LocalField, rows, prec: int | None = None) -> "KMat":
        """Entries may be 0, ints, Fractions, strings, or KElem."""
        prec = prec or lf.default_precision
        elems = [[None if _is_zero_spec(x) else _as_kelem(lf, x, prec) for x in row]
                 for row in rows]
        vals = [e.val for row in elems for e in row if e is not None]
        shift = min(vals, default=0)
        ring = lf.ring(prec)
        data = []
        for row in elems:
            out = []
            for e in row:
                if e is None:
                    out.append(0)
                else:
                    u = lf.ring(e.prec).lift_naive(e.unit, ring)
                    out.append(ring.mul_pk(u, e.val - shift))
            data.append(out)
        return cls(lf, data, shift, prec)

    @classmethod
    def identity(cls, lf: LocalField, m: int, prec: int | None = None) -> "KMat":
        return cls(lf, [[1 if i == j else 0 for j in range(m)] for i in range(m)],
                   0, prec or lf.default_precision)

    def copy(self) -> "KMat":
        return KMat(self.lf, self.data, self.shift, self.prec)

    @property
    def ring(self):
        return self.lf.ring(self.prec)

    def __repr__(self):
        return (f"KMat({self.nrows}x{self.ncols}, shift={self.shift}, "
                f"prec={self.prec})")

    # basic operations -------------------------------------------------------

    def _at_prec(self, prec: int) -> "KMat":
        if prec == self.prec:
            return self
        if prec > self.prec:
            raise PrecisionError("cannot raise matrix precision")
        src, dst = self.ring, self.lf.ring(prec)
        data = [[src.reduce_to(x, dst) for x in row] for row in self.data]
        return KMat(self.lf, data, self.shift, prec)

    def __matmul__(self, other: "KMat") -> "KMat":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        prec = min(self.prec, other.prec)
        A, B = self._at_prec(prec), other._at_prec(prec)
        ring = A.ring
        data = []
        for i in range(A.nrows):
            row = []
            for j in range(B.ncols):
                acc = 0
                for k in range(A.ncols):
                    x = A.data[i][k]
                    if x:
                        y = B.data[k][j]
                        if y:
                            acc = ring.add(acc, ring.mul(x, y))
                row.append(acc)
            data.append(row)
        return KMat(self.lf, data, A.shift + B.shift, prec)

    def scale_pi(self, k: int) -> "KMat":
        return KMat(self.lf, self.data, self.shift + k, self.prec)

    def with_shift(self, shift: int) -> "KMat":
        """Re-express with a different shift.

        Lowering multiplies entries by pi-powers; raising divides them
        exactly (every entry must have enough valuation) and costs the
        same number of known digits.
        """
        if shift == self.shift:
            return self
        ring = self.ring
        if shift < self.shift:
            k = self.shift - shift
            data = [[ring.mul_pk(x, k) for x in row] for row in self.data]
            return KMat(self.lf, data, shift, self.prec)
        k = shift - self.shift
        if k >= self.prec - 1:
            raise PrecisionError("cannot raise the shift that far")
        if any(ring.val(x) < k for row in self.data for x in row):
            raise ValueError("entries are not divisible by the requested pi-power")
        data = [[ring.div_pk(x, k) for x in row] for row in self.data]
        red = self.lf.ring(self.prec - k)
        data = [[ring.reduce_to(x, red) for x in row] for row in data]
        return KMat(self.lf, data, shift, self.prec - k)

    def hstack(self, other: "KMat") -> "KMat":
        if self.nrows != other.nrows:
            raise ValueError("row mismatch")
        s = min(self.shift, other.shift)
        prec = min(self.prec, other.prec)
        A = self._at_prec(prec).with_shift(s)
        B = other._at_prec(prec).with_shift(s)
        return KMat(self.lf, [ra + rb for ra, rb in zip(A.data, B.data)], s, prec)

    def transpose(self) -> "KMat":
        data = [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return KMat(self.lf, data, self.shift, self.prec)

    def col(self, j: int) -> "KMat":
        return KMat(self.lf, [[self.data[i][j]] for i in range(self.nrows)],
                    self.shift, self.prec)

    def entry_val(self, i: int, j: int) -> int | None:
        """Valuation of an entry, or None when it vanishes at this precision."""
        v = self.ring.val(self.data[i][j])
        return None if v >= self.prec else self.shift + v

    def is_integral(self) -> bool:
        if self.shift >= 0:
            return True
        need = -self.shift
        ring = self.ring
        if need >= self.prec:
            raise PrecisionError("cannot decide integrality at this precision")
        return all(ring.val(x) >= need for row in self.data for x in row)

    def entry_residue(self, i: int, j: int, e: int) -> int:
        """The entry mod pi^e, encoded in lf.ring(e); entry must be integral."""
        ring_e = self.lf.ring(e)
        x = self.data[i][j]
        if self.shift >= e:
            return 0
        if self.shift >= 0:
            if self.prec < e - self.shift:
                raise PrecisionError("not enough digits for the residue")
            return ring_e.mul_pk(self.ring.lift_naive(x, ring_e), self.shift)
        need = -self.shift
        if self.ring.val(x) < need:
            raise ValueError("entry is not integral")
        if self.prec - need < e:
            raise PrecisionError("not enough digits for the residue")
        return self.ring.lift_naive(self.ring.div_pk(x, need), ring_e)

    def entry_kelem(self, i: int, j: int) -> KElem | None:
        x = self.data[i][j]
        v = self.ring.val(x)
        if v >= self.prec:
            return None
        u = self.ring.reduce_to(self.ring.div_pk(x, v), self.lf.ring(self.prec - v))
        return KElem(self.lf, self.shift + v, u, self.prec - v)

    def __eq__(self, other):
        if not isinstance(other, KMat):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        prec = min(self.prec, other.prec)
        s = min(self.shift, other.shift)
        A = self._at_prec(prec).with_shift(s)
        B = other._at_prec(prec).with_shift(s)
        avail = prec - (max(self.shift, other.shift) - s)
        ring = A.ring
        red = self.lf.ring(max(1, avail))
        return all(ring.reduce_to(A.data[i][j], red) == ring.reduce_to(B.data[i][j], red)
                   for i in range(A.nrows) for j in range(A.ncols))

    # determinant and inverse -------------------------------------------------

    def _det_data(self) -> int:
        m = self.nrows
        if m != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        ring = self.ring
        if m == 1:
            return self.data[0][0]
        # Leibniz expansion; fine at desk scale (m <= 4)
        from itertools import permutations
        total = 0
        for perm in permutations(range(m)):
            prod = 1
            for i, j in enumerate(perm):
                prod = ring.mul(prod, self.data[i][j])
                if prod == 0:
                    break
            if prod:
                inv = sum(1 for a in range(m) for b in range(a + 1, m)
                          if perm[a] > perm[b])
                total = ring.add(total, ring.neg(prod) if inv % 2 else prod)
        return total

    def det_val(self) -> int:
        d = self._det_data()
        v = self.ring.val(d)
        if v >= self.prec - 1:
            raise PrecisionError("determinant vanishes at this precision")
        return self.nrows * self.shift + v

    def _adjugate(self):
        m = self.nrows
        ring = self.ring
        if m == 1:
            return [[1]]
        adj = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                minor = KMat(self.lf,
                             [[self.data[r][c] for c in range(m) if c != j]
                              for r in range(m) if r != i],
                             0, self.prec)
                d = minor._det_data()
                adj[j][i] = ring.neg(d) if (i + j) % 2 else d
        return adj

    def inverse(self) -> "KMat":
        d = self._det_data()
        ring = self.ring
        v = ring.val(d)
        if v >= self.prec - 1:
            raise PrecisionError("matrix is singular at this precision")
        newprec = self.prec - v
        ring2 = self.lf.ring(newprec)
        uinv = ring2.inv(ring.reduce_to(ring.div_pk(d, v), ring2))
        adj = self._adjugate()
        data = [[ring2.mul(ring.reduce_to(x, ring2), uinv) for x in row] for row in adj]
        return KMat(self.lf, data, -self.shift - v, newprec)

    # normal forms -------------------------------------------------------------

    def canonical_hnf(self) -> "KMat":
        """Canonical lower-triangular column form of a rank-m column span.

        Pivot: minimal-valuation entry in the working row, leftmost on
        ties; pivots are normalized to pi^e and entries left of a pivot
        are reduced mod the pivot of their row.
        """
        m, c = self.nrows, self.ncols
        if c < m:
            raise ValueError("not enough columns for full rank")
        ring = self.ring
        D = [row[:] for row in self.data]
        cur = self.prec
        for r in range(m):
            best, bj = None, None
            for j in range(r, c):
                v = ring.val(D[r][j])
                if v < cur and (best is None or v < best):
                    best, bj = v, j
            if best is None:
                raise PrecisionError("no usable pivot (precision exhausted or rank deficient)")
            if best >= cur - 1:
                raise PrecisionError("pivot valuation is ambiguous at this precision")
            if bj != r:
                for i in range(m):
                    D[i][r], D[i][bj] = D[i][bj], D[i][r]
            # normalize the pivot column so the pivot becomes pi^best
            u = ring.div_pk(D[r][r], best)
            uinv = ring.inv(u)
            for i in range(r, m):
                D[i][r] = ring.mul(D[i][r], uinv)
            # clear the rest of the row
            for j in range(r + 1, c):
                x = D[r][j]
                if ring.val(x) < cur:
                    fac = ring.div_pk(x, best)
                    for i in range(r, m):
                        D[i][j] = ring.sub(D[i][j], ring.mul(fac, D[i][r]))
                D[r][j] = 0
            cur -= best
        # drop the spent columns; they are 0 to the working precision
        T = [row[:m] for row in D]
        # reduce entries left of each pivot modulo that pivot
        for r in range(m):
            e = ring.val(T[r][r])
            pe = self.lf.p**e
            for j in range(r):
                x = T[r][j]
                if x == 0:
                    continue
                rem = ring.encode([ci % pe for ci in ring.decode(x)]) if e > 0 else 0
                fac = ring.div_pk(ring.sub(x, rem), e)
                for i in range(r, m):
                    T[i][j] = ring.sub(T[i][j], ring.mul(fac, T[i][r]))
        if cur < 2:
            raise PrecisionError("precision exhausted during column reduction")
        return KMat(self.lf, T, self.shift, cur)


def _is_zero_spec(x) -> bool:
    return x == 0 and not isinstance(x, KElem)


def _as_kelem(lf: LocalField, x, prec: int) -> KElem:
    if isinstance(x, KElem):
        return x
    if isinstance(x, str):
        return lf.parse(x, prec)
    return lf.from_rational(x, prec)


def smith_normal_form(M: KMat):
    """SNF of an integral square matrix: exponents and the left transform.

    Returns (exps, Uinv) with U M W = diag(units * pi^exps) for unimodular
    U, W and Uinv = U^(-1); exps come out ascending.  Only Uinv is
    accumulated since the right transform never enters quotient data.
    """
    if not M.is_integral():
        raise ValueError("SNF needs an integral matrix")
    M = M.with_shift(0)
    m = M.nrows
    if m != M.ncols:
        raise ValueError("SNF of a non-square matrix")
    ring = M.ring
    D = [row[:] for row in M.data]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]  # Uinv, by columns
    cur = M.prec
    exps = []
    for k in range(m):
        best, bi, bj = None, None, None
        for i in range(k, m):
            for j in range(k, m):
                v = ring.val(D[i][j])
                if v < cur and (best is None or v < best):
                    best, bi, bj = v, i, j
        if best is None:
            raise PrecisionError("SNF pivot vanished; precision exhausted")
        if best >= cur - 1:
            raise PrecisionError("SNF pivot valuation ambiguous at this precision")
        if bi != k:   # row swap; record col swap on Uinv
            D[k], D[bi] = D[bi], D[k]
            for r in range(m):
                U[r][k], U[r][bi] = U[r][bi], U[r][k]
        if bj != k:   # column swap; unrecorded
            for r in range(m):
                D[r][k], D[r][bj] = D[r][bj], D[r][k]
        e = best
        piv_unit = ring.div_pk(D[k][k], e)
        piv_inv = ring.inv(piv_unit)
        # clear column k below the pivot
        for i in range(k + 1, m):
            x = D[i][k]
            if ring.val(x) < cur:
                fac = ring.mul(ring.div_pk(x, e), piv_inv)
                for j in range(k, m):
                    D[i][j] = ring.sub(D[i][j], ring.mul(fac, D[k][j]))
                for r in range(m):  # Uinv col_k += fac * col_i
                    U[r][k] = ring.add(U[r][k], ring.mul(fac, U[r][i]))
            D[i][k] = 0
        # clear row k to the right; pure column operations
        for j in range(k + 1, m):
            x = D[k][j]
            if ring.val(x) < cur:
                fac = ring.mul(ring.div_pk(x, e), piv_inv)
                for i in range(k, m):
                    D[i][j] = ring.sub(D[i][j], ring.mul(fac, D[i][k]))
            D[k][j] = 0
        exps.append(e)
        cur -= e
        if cur < 2:
            raise PrecisionError("precision exhausted during SNF")
    Uinv = KMat(M.lf, U, 0, cur)
    return exps, Uinv


# ---------------------------------------------------------------------------
# lattices


class Lattice:
    """A full-rank O-lattice in K^m, held by its canonical basis."""

    __slots__ = ("lf", "m", "mat")

    def __init__(self, mat: KMat):
        if mat.ncols < mat.nrows:
            raise ValueError("not enough generators for a full-rank lattice")
        self.lf = mat.lf
        self.m = mat.nrows
        hnf = mat.canonical_hnf()
        # Canonical entries are exact (pi-power pivots, residues reduced mod
        # the row pivot), so the working precision spent on reduction can be
        # restored; chained constructions then never compound precision loss.
        # The target leaves room for a follow-up inverse plus one more column
        # reduction, both of which cost about the determinant valuation.
        piv = sum(hnf.ring.val(hnf.data[i][i]) for i in range(self.m))
        target = max(mat.prec, mat.lf.default_precision,
                     6 * (piv + self.m * abs(hnf.shift)) + 12)
        ring_to = mat.lf.ring(target)
        data = [[hnf.ring.lift_naive(x, ring_to) for x in row] for row in hnf.data]
        self.mat = KMat(mat.lf, data, hnf.shift, target)

    @classmethod
    def from_rows(cls, lf: LocalField, rows, prec: int | None = None) -> "Lattice":
        return cls(KMat.from_rows(lf, rows, prec))

    def __repr__(self):
        return f"Lattice(m={self.m}, shift={self.mat.shift})"

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return lat_contains_lattice(self, other) and lat_contains_lattice(other, self)


def standard_lattice(lf: LocalField, m: int, prec: int | None = None) -> Lattice:
    return Lattice(KMat.identity(lf, m, prec))


def principal_lattice(lf: LocalField, v: int, prec: int | None = None) -> Lattice:
    """pi^v O inside K^1."""
    return Lattice(KMat.identity(lf, 1, prec).scale_pi(v))


def lat_apply(f: KMat, A: Lattice) -> Lattice:
    return Lattice(f @ A.mat)


def lat_sum(A: Lattice, B: Lattice) -> Lattice:
    if A.m != B.m:
        raise ValueError("different ambient spaces")
    return Lattice(A.mat.hstack(B.mat))


def _dual_mat(A: Lattice) -> KMat:
    return A.mat.inverse().transpose()


def lat_intersect(A: Lattice, B: Lattice) -> Lattice:
    # (A cap B)* = A* + B*
    dual_sum = Lattice(_dual_mat(A).hstack(_dual_mat(B)))
    return Lattice(_dual_mat(dual_sum))


def lat_contains(A: Lattice, x: KMat) -> bool:
    """Is the column vector x in A?"""
    return (A.mat.inverse() @ x).is_integral()


def lat_contains_lattice(A: Lattice, B: Lattice) -> bool:
    return (A.mat.inverse() @ B.mat).is_integral()


class LatticeQuotient:
    """A/B presented as a FiniteModule plus projection and lift maps."""

    __slots__ = ("A", "B", "module", "_P", "_Pinv", "_exps", "_idx")

    def __init__(self, A: Lattice, B: Lattice):
        trans = A.mat.inverse() @ B.mat
        if not trans.is_integral():
            raise ValueError("B is not contained in A")
        exps, Uinv = smith_normal_form(trans)
        self._P = A.mat @ Uinv
        self._Pinv = self._P.inverse()
        self._exps = exps
        self._idx = [k for k, e in enumerate(exps) if e > 0]
        self.A, self.B = A, B
        self.module = FiniteModule(A.lf, [exps[k] for k in self._idx])

    def proj(self, x: KMat) -> tuple:
        """Class of a vector of A in the abstract module."""
        y = self._Pinv @ x
        return tuple(y.entry_residue(k, 0, self._exps[k]) for k in self._idx)

    def lift(self, t: tuple) -> KMat:
        """A vector of A representing the class t."""
        lf = self.A.lf
        m = self.A.m
        prec = self._P.prec
        ring = lf.ring(prec)
        col = [[0] for _ in range(m)]
        for pos, k in enumerate(self._idx):
            c = t[pos]
            if c:
                col[k][0] = lf.ring(self._exps[k]).lift_naive(c, ring)
        return self._P @ KMat(lf, col, 0, prec)


def quotient_struct(A: Lattice, B: Lattice) -> LatticeQuotient:
    """Structure of A/B for B contained in A (checked)."""
    return LatticeQuotient(A, B)


def induced_hom(srcQ: LatticeQuotient, dstQ: LatticeQuotient,
                f: KMat | None = None) -> ModuleHom:
    """The map of abstract quotients obtained by lift, optionally f, project."""
    cols = []
    for g in srcQ.module.generators():
        vec = srcQ.lift(g)
        if f is not None:
            vec = f @ vec
        cols.append(dstQ.proj(vec))
    return ModuleHom(srcQ.module, dstQ.module, cols)


def rel_dim(A: Lattice, B: Lattice, n: int) -> int:
    """dim(A / A cap B) - dim(B / A cap B), as an exact integer."""
    I = lat_intersect(A, B)
    d1 = sum(quotient_struct(A, I).module.exps)
    d2 = sum(quotient_struct(B, I).module.exps)
    q = A.lf.q
    return (q**d1 - 1) // n - (q**d2 - 1) // n


# JSON form: an m x m matrix of element strings in the shared grammar ---------


def lattice_to_json(A: Lattice) -> str:
    import json
    rows = []
    for i in range(A.m):
        row = []
        for j in range(A.m):
            e = A.mat.entry_kelem(i, j)
            row.append("0" if e is None else e.as_str())
        rows.append(row)
    return json.dumps({"p": A.lf.p, "f": A.lf.f, "basis": rows})


def lattice_from_json(lf: LocalField, text: str) -> Lattice:
    import json
    data = json.loads(text)
    if (data.get("p"), data.get("f")) != (lf.p, lf.f):
        raise ValueError("lattice was serialized over a different field")
    rows = [[0 if s == "0" else s for s in row] for row in data["basis"]]
    return Lattice.from_rows(lf, rows)
