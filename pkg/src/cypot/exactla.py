"""Exact sparse linear algebra over Q.

Vectors are dicts ``{coordinate: Fraction}`` with no stored zeros.  A
:class:`Subspace` always holds the canonical reduced row-echelon basis of
its span (leftmost pivot, pivot entry 1, pivot columns cleared elsewhere),
so equality of subspaces is equality of bases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

Vec = Dict[int, Fraction]


class DimensionError(ValueError):
    pass


def _vec(v) -> Vec:
    if isinstance(v, Mapping):
        return {int(i): Fraction(c) for i, c in v.items() if c != 0}
    return {i: Fraction(c) for i, c in enumerate(v) if c != 0}


def _check_len(v, ambient_dim):
    if isinstance(v, Mapping):
        if v and (min(v) < 0 or max(v) >= ambient_dim):
            raise DimensionError("coordinate out of range for ambient dimension %d" % ambient_dim)
    elif len(v) != ambient_dim:
        raise DimensionError("vector of length %d in ambient dimension %d" % (len(v), ambient_dim))


class Echelon:
    """Incremental (non-reduced) echelon form.

    ``lead="min"`` pivots on the smallest coordinate of each reduced vector,
    ``lead="max"`` on the largest.  The choice changes the work done, never
    the span or the rank.
    """

    def __init__(self, lead: str = "min"):
        if lead not in ("min", "max"):
            raise ValueError(lead)
        self._pick = min if lead == "min" else max
        self.pivots: Dict[int, Vec] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v: Vec) -> Vec:
        v = dict(v)
        pick = self._pick
        pivots = self.pivots
        while v:
            p = pick(v)
            row = pivots.get(p)
            if row is None:
                return v
            f = v[p]
            for c, a in row.items():
                x = v.get(c, 0) - f * a
                if x:
                    v[c] = x
                else:
                    v.pop(c, None)
        return v

    def add(self, v: Vec) -> bool:
        """Insert v; return True if it was independent of what is stored."""
        v = self.reduce(v)
        if not v:
            return False
        p = self._pick(v)
        inv = 1 / v[p]
        if inv != 1:
            v = {c: a * inv for c, a in v.items()}
        self.pivots[p] = v
        return True

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def reduced_rows(self) -> List[Vec]:
        """Canonical RREF rows sorted by pivot (only valid for lead='min')."""
        order = sorted(self.pivots)
        done: Dict[int, Vec] = {}
        for p in reversed(order):
            row = dict(self.pivots[p])
            for c in sorted(k for k in row if k != p):
                if c in done and c in row:
                    f = row[c]
                    for cc, a in done[c].items():
                        x = row.get(cc, 0) - f * a
                        if x:
                            row[cc] = x
                        else:
                            row.pop(cc, None)
            done[p] = row
        return [done[p] for p in order]


class Subspace:
    """A subspace of Q^ambient_dim given by its reduced echelon basis.

    ``ambient_degree`` and ``n`` are set when the ambient space is the tensor
    power V^{(x)d} with coordinates in word order.
    """

    __slots__ = ("ambient_dim", "rows", "pivots", "ambient_degree", "n")

    def __init__(self, ambient_dim: int, rows: Sequence[Vec] = (),
                 ambient_degree: int | None = None, n: int | None = None):
        self.ambient_dim = ambient_dim
        self.rows: Tuple[Vec, ...] = tuple(rows)
        self.pivots: Tuple[int, ...] = tuple(min(r) for r in self.rows)
        self.ambient_degree = ambient_degree
        self.n = n

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(sorted(r.items())) for r in self.rows)))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)

    def _echelon(self) -> Echelon:
        e = Echelon("min")
        for r in self.rows:
            e.pivots[min(r)] = r
        return e

    def contains(self, v) -> bool:
        _check_len(v, self.ambient_dim)
        return self._echelon().contains(_vec(v))

    def coordinates(self, v) -> Dict[int, Fraction] | None:
        """Coefficients of v in this basis (keyed by row number), or None."""
        v = _vec(v)
        out = {}
        for k, (p, row) in enumerate(zip(self.pivots, self.rows)):
            f = v.get(p)
            if f:
                out[k] = f
                for c, a in row.items():
                    x = v.get(c, 0) - f * a
                    if x:
                        v[c] = x
                    else:
                        v.pop(c, None)
        return None if v else out

    def dense_rows(self) -> List[List[Fraction]]:
        return [[r.get(j, Fraction(0)) for j in range(self.ambient_dim)] for r in self.rows]

    def is_subspace_of(self, other: "Subspace") -> bool:
        e = other._echelon()
        return all(e.contains(r) for r in self.rows)

    def _like(self, rows):
        return Subspace(self.ambient_dim, rows, self.ambient_degree, self.n)


def echelon_basis(vectors: Iterable, ambient_dim: int, *,
                  ambient_degree: int | None = None, n: int | None = None) -> Subspace:
    """Canonical reduced echelon basis of the span of ``vectors``."""
    e = Echelon("min")
    for v in vectors:
        _check_len(v, ambient_dim)
        e.add(_vec(v))
    return Subspace(ambient_dim, e.reduced_rows(), ambient_degree, n)


def span_sum(s1: Subspace, s2: Subspace) -> Subspace:
    _same_ambient(s1, s2)
    return echelon_basis(list(s1.rows) + list(s2.rows), s1.ambient_dim,
                         ambient_degree=s1.ambient_degree, n=s1.n)


def _same_ambient(s1, s2):
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError("ambient mismatch: %d vs %d" % (s1.ambient_dim, s2.ambient_dim))


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """S1 n S2 from the nullspace of [B1^T | -B2^T]."""
    _same_ambient(s1, s2)
    k1 = s1.dim
    if k1 == 0 or s2.dim == 0:
        return s1._like(())
    cols = [dict(r) for r in s1.rows] + [{c: -a for c, a in r.items()} for r in s2.rows]
    m = RatMatrix.from_columns(cols, s1.ambient_dim)
    ker = kernel_basis(m)
    vecs = []
    for kv in ker.rows:
        v: Vec = {}
        for j, a in kv.items():
            if j < k1:
                for c, b in s1.rows[j].items():
                    x = v.get(c, 0) + a * b
                    if x:
                        v[c] = x
                    else:
                        v.pop(c, None)
        vecs.append(v)
    return echelon_basis(vecs, s1.ambient_dim, ambient_degree=s1.ambient_degree, n=s1.n)


def contains(s: Subspace, v) -> bool:
    return s.contains(v)


# -- tensor-power helpers ---------------------------------------------------

def full_space(n: int, d: int) -> Subspace:
    dim = n ** d
    return Subspace(dim, [{i: Fraction(1)} for i in range(dim)], d, n)


def tensor_right(s: Subspace, n: int, k: int = 1) -> Subspace:
    """S (x) V^{(x)k} inside V^{(x)(d+k)}."""
    m = n ** k
    rows = [{c * m + t: a for c, a in r.items()} for r in s.rows for t in range(m)]
    d = None if s.ambient_degree is None else s.ambient_degree + k
    return echelon_basis(rows, s.ambient_dim * m, ambient_degree=d, n=n)


def tensor_left(s: Subspace, n: int, k: int = 1) -> Subspace:
    """V^{(x)k} (x) S inside V^{(x)(k+d)}."""
    m = n ** k
    D = s.ambient_dim
    rows = [{t * D + c: a for c, a in r.items()} for t in range(m) for r in s.rows]
    d = None if s.ambient_degree is None else s.ambient_degree + k
    return echelon_basis(rows, D * m, ambient_degree=d, n=n)


# -- matrices ---------------------------------------------------------------

class RatMatrix:
    """Sparse rational matrix stored by columns."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, entries: Mapping[Tuple[int, int], object] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols: List[Vec] = [dict() for _ in range(ncols)]
        for (i, j), a in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise DimensionError("entry (%d, %d) outside %dx%d" % (i, j, nrows, ncols))
            a = Fraction(a)
            if a:
                self.cols[j][i] = self.cols[j].get(i, 0) + a
        for c in self.cols:
            for i in [i for i, a in c.items() if not a]:
                del c[i]

    @classmethod
    def from_columns(cls, cols: Sequence[Mapping[int, object]], nrows: int) -> "RatMatrix":
        m = cls(nrows, 0)
        m.ncols = len(cols)
        m.cols = [_vec(c) for c in cols]
        for c in m.cols:
            _check_len(c, nrows)
        return m

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[object]]) -> "RatMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        return cls(nr, nc, {(i, j): a for i, r in enumerate(rows) for j, a in enumerate(r) if a != 0})

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entries(self) -> Dict[Tuple[int, int], Fraction]:
        return {(i, j): a for j, c in enumerate(self.cols) for i, a in c.items()}

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def is_zero(self) -> bool:
        return not any(self.cols)

    def dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, a in c.items():
                out[i][j] = a
        return out

    def rows(self) -> List[Vec]:
        out: List[Vec] = [dict() for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, a in c.items():
                out[i][j] = a
        return out

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_columns(self.rows(), self.ncols)

    def apply(self, v: Mapping[int, object]) -> Vec:
        out: Vec = {}
        for j, b in v.items():
            if b:
                for i, a in self.cols[j].items():
                    x = out.get(i, 0) + a * b
                    if x:
                        out[i] = x
                    else:
                        out.pop(i, None)
        return out

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise DimensionError("cannot multiply %dx%d by %dx%d" % (self.nrows, self.ncols, other.nrows, other.ncols))
        m = RatMatrix(self.nrows, 0)
        m.ncols = other.ncols
        m.cols = [self.apply(c) for c in other.cols]
        return m

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            for i, x in b.items():
                y = c.get(i, 0) - x
                if y:
                    c[i] = y
                else:
                    c.pop(i, None)
            cols.append(c)
        m = RatMatrix(self.nrows, 0)
        m.ncols = self.ncols
        m.cols = cols
        return m

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def rank(self) -> int:
        # Eliminating the shorter family of vectors; pivoting on the largest
        # coordinate keeps fill-in low for the triangular bimodule matrices.
        if self.ncols <= self.nrows:
            vecs = self.cols
        else:
            vecs = self.rows()
        e = Echelon("max")
        r = 0
        for v in vecs:
            if v and e.add(v):
                r += 1
        return r

    def to_triples(self) -> str:
        """One ``row col value`` line per nonzero entry, row-major."""
        lines = ["%d %d" % (self.nrows, self.ncols)]
        for (i, j), a in sorted(self.entries().items()):
            lines.append("%d %d %s" % (i, j, a))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triples(cls, text: str) -> "RatMatrix":
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        nr, nc = int(lines[0][0]), int(lines[0][1])
        return cls(nr, nc, {(int(i), int(j)): Fraction(a) for i, j, a in lines[1:]})

    def __repr__(self):
        return "RatMatrix(%dx%d, nnz=%d)" % (self.nrows, self.ncols, self.nnz())


def rank(m: RatMatrix) -> int:
    return m.rank()


def kernel_basis(m: RatMatrix) -> Subspace:
    """Right nullspace of m as a subspace of Q^ncols."""
    e = Echelon("min")
    for r in m.rows():
        if r:
            e.add(r)
    rref = e.reduced_rows()
    pivots = [min(r) for r in rref]
    pivset = set(pivots)
    vecs = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v: Vec = {f: Fraction(1)}
        for p, r in zip(pivots, rref):
            a = r.get(f)
            if a:
                v[p] = -a
        vecs.append(v)
    return echelon_basis(vecs, m.ncols)


def solve(m: RatMatrix, b) -> Vec | None:
    """A particular solution of m x = b with all free variables zero, or None."""
    b = _vec(b)
    _check_len(b, m.nrows)
    rows = m.rows()
    for i, a in b.items():
        rows[i][m.ncols] = a
    e = Echelon("min")
    for r in rows:
        if r:
            e.add(r)
    x: Vec = {}
    for r in e.reduced_rows():
        p = min(r)
        if p == m.ncols:
            return None
        a = r.get(m.ncols)
        if a:
            x[p] = a
    return x


def inverse(rows: Sequence[Sequence[object]]) -> List[List[Fraction]]:
    """Inverse of a square rational matrix given densely; ValueError if singular."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("matrix is not square")
    e = Echelon("min")
    for i, r in enumerate(rows):
        v = {j: Fraction(a) for j, a in enumerate(r) if a != 0}
        v[n + i] = Fraction(1)
        e.add(v)
    rref = e.reduced_rows()
    if [min(r) for r in rref] != list(range(n)):
        raise ValueError("matrix is singular")
    # [U | I] reduces to [I | U^{-1}]
    return [[r.get(n + k, Fraction(0)) for k in range(n)] for r in rref]


def is_invertible(rows: Sequence[Sequence[object]]) -> bool:
    return RatMatrix.from_dense(rows).rank() == len(rows) if rows else True
