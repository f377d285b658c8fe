"""The self-dual complex of a potential algebra, degree by degree.

Every map in this module is a morphism of free graded A-bimodules
A(x)E(x)A -> A(x)E'(x)A, described symbolically by the images of the
generators of E as sums ``coef * a (x) e' (x) b`` with a, b words.  The
matrix of such a map in internal degree d uses the basis
``a (x) e (x) b`` of (A E A)_d enumerated by (|a|, e, |b|) and then by the
normal words a and b.  Generator degrees may be negative (dual spaces).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exactla import Echelon, RatMatrix, kernel_basis
from .grading import GradedQuotient
from .ncpoly import NcPoly, Word, cyclic_sum, partial_derivative, relations

Term = Tuple[Fraction, Word, int, Word]


class BimoduleMap:
    """A bimodule map given on generators: ``images[e]`` is a list of terms
    ``(coef, a, e_target, b)`` meaning ``sum coef * a (x) e_target (x) b``."""

    def __init__(self, source_degrees: Sequence[int], target_degrees: Sequence[int],
                 images: Sequence[Sequence[Term]], name: str = "", shift: int = 0):
        self.shift = shift
        self.source_degrees = list(source_degrees)
        self.target_degrees = list(target_degrees)
        self.images = [[(Fraction(c), tuple(a), int(e), tuple(b)) for c, a, e, b in img if c]
                       for img in images]
        self.name = name
        if len(self.images) != len(self.source_degrees):
            raise ValueError("one image per source generator")
        for e, img in enumerate(self.images):
            for c, a, t, b in img:
                if len(a) + self.target_degrees[t] + len(b) != self.source_degrees[e] + shift:
                    raise ValueError("%s is not homogeneous of degree %d at generator %d"
                                     % (name, shift, e))

    def matrix(self, gq: GradedQuotient, d: int) -> RatMatrix:
        """Matrix from (A E A)_d to (A E' A)_{d + shift}."""
        target_shift = self.shift
        src = BimoduleBasis(gq, self.source_degrees, d)
        tgt = BimoduleBasis(gq, self.target_degrees, d + target_shift)
        cols: List[Dict[int, Fraction]] = []
        for (i, e, j), off, (ni, nj) in src.blocks:
            img = self.images[e]
            left_normal = gq.normal[i]
            right_normal = gq.normal[j]
            for ka in range(ni):
                ma = left_normal[ka]
                for kb in range(nj):
                    mb = right_normal[kb]
                    col: Dict[int, Fraction] = {}
                    for c, a, t, b in img:
                        ti, tj = i + len(a), j + len(b)
                        toff = tgt.offset(ti, t, tj)
                        if toff is None:
                            continue
                        tnj = gq.dim(tj)
                        lv = gq.reduce_word(ma + a)
                        if not lv:
                            continue
                        rv = gq.reduce_word(b + mb)
                        for p, x in lv.items():
                            base = toff + p * tnj
                            cx = c * x
                            for q, y in rv.items():
                                key = base + q
                                val = col.get(key, 0) + cx * y
                                if val:
                                    col[key] = val
                                else:
                                    col.pop(key, None)
                    cols.append(col)
        m = RatMatrix(tgt.dim, 0)
        m.ncols = len(cols)
        m.cols = cols
        return m

    def trace_matrix(self, gq: GradedQuotient, d: int) -> RatMatrix:
        """Matrix of M (x)_{A^e} (this map) for M = A, degree d.

        m (x) (a (x) e (x) b) becomes (b m a) (x) e; the basis of A (x) E in
        degree d is ordered by generator e, then by the normal word m.
        """
        src = TraceBasis(gq, self.source_degrees, d)
        tgt = TraceBasis(gq, self.target_degrees, d + self.shift)
        cols = []
        for e, off, dm in src.blocks:
            dm_deg = d - self.source_degrees[e]
            for k in range(dm):
                m = gq.normal[dm_deg][k]
                col: Dict[int, Fraction] = {}
                for c, a, t, b in self.images[e]:
                    toff = tgt.offset(t)
                    if toff is None:
                        continue
                    for q, y in gq.reduce_word(b + m + a).items():
                        key = toff + q
                        val = col.get(key, 0) + c * y
                        if val:
                            col[key] = val
                        else:
                            col.pop(key, None)
                cols.append(col)
        mat = RatMatrix(tgt.dim, 0)
        mat.ncols = len(cols)
        mat.cols = cols
        return mat


class BimoduleBasis:
    """Block layout of (A E A)_d."""

    def __init__(self, gq: GradedQuotient, degrees: Sequence[int], d: int):
        self.blocks = []
        self._off = {}
        total = 0
        for i in range(0, d - min(degrees, default=0) + 1):
            for e, deg in enumerate(degrees):
                j = d - i - deg
                if j < 0:
                    continue
                if i > gq.D or j > gq.D:
                    raise ValueError("degree %d needs A beyond the bound %d" % (d, gq.D))
                ni, nj = gq.dim(i), gq.dim(j)
                if ni and nj:
                    self.blocks.append(((i, e, j), total, (ni, nj)))
                    self._off[(i, e, j)] = total
                    total += ni * nj
        self.dim = total

    def offset(self, i, e, j) -> Optional[int]:
        return self._off.get((i, e, j))


class TraceBasis:
    """Block layout of (A (x) E)_d."""

    def __init__(self, gq: GradedQuotient, degrees: Sequence[int], d: int):
        self.blocks = []
        self._off = {}
        total = 0
        for e, deg in enumerate(degrees):
            k = d - deg
            if k < 0:
                continue
            if k > gq.D:
                raise ValueError("degree %d needs A beyond the bound %d" % (d, gq.D))
            dm = gq.dim(k)
            if dm:
                self.blocks.append((e, total, dm))
                self._off[e] = total
                total += dm
        self.dim = total

    def offset(self, e) -> Optional[int]:
        return self._off.get(e)


def _poly_terms(p: NcPoly) -> List[Tuple[Word, Fraction]]:
    return sorted(p.terms.items())


def koszul_differentials(n: int, rel: Sequence[NcPoly]):
    """d_1 on V and d_2 on the given relations, as symbolic bimodule maps.

    d_1(x) = x(x)1 - 1(x)x and d_2(v_1..v_N) = sum v_1..v_{i-1} (x) v_i (x) v_{i+1}..v_N.
    """
    d1 = BimoduleMap([1] * n, [0],
                     [[(1, (i,), 0, ()), (-1, (), 0, (i,))] for i in range(n)], "d1")
    degs = [r.degree for r in rel]
    imgs = []
    for r in rel:
        img = []
        for word, c in _poly_terms(r):
            for p, x in enumerate(word):
                img.append((c, word[:p], x, word[p + 1:]))
        imgs.append(img)
    d2 = BimoduleMap(degs, [1] * n, imgs, "d2")
    return d1, d2


def choose_independent(vectors: Sequence[Dict[int, Fraction]]) -> List[int]:
    """Greedy smallest-index subset of linearly independent vectors."""
    e = Echelon("min")
    return [i for i, v in enumerate(vectors) if v and e.add(v)]


def express(vectors: Sequence[Dict[int, Fraction]], basis_idx: Sequence[int], target) -> Dict[int, Fraction]:
    """Coefficients lam_j with target = sum lam_j vectors[j], j in basis_idx."""
    cols = [vectors[j] for j in basis_idx] + [{k: -a for k, a in target.items()}]
    rows = max([max(v, default=-1) for v in cols], default=-1) + 1
    ker = kernel_basis(RatMatrix.from_columns(cols, rows))
    last = len(basis_idx)
    for v in ker.rows:
        if v.get(last):
            s = 1 / v[last]
            return {basis_idx[k]: a * s for k, a in v.items() if k != last}
    raise ValueError("target is not in the span")


class PotentialComplex:
    """C_w, its dual, and the comparison maps for a homogeneous potential w.

    Position p of C_w is A k A, A V A, A R A, A kc(w) A for p = 0..3.
    Position p of the dual is the target of f_p: A kc(w)* A, A R* A,
    A V* A, A k* A for p = 0..3, so that the dual differentials run
    3 -> 2 -> 1 -> 0 as d_1*, d_2*, d_3*.
    """

    def __init__(self, w: NcPoly, n: int):
        if not w or not w.is_homogeneous():
            raise ValueError("potential must be nonzero and homogeneous")
        self.w = w
        self.n = n
        self.N = w.degree - 1
        if self.N < 1:
            raise ValueError("potential must have degree >= 2")
        N = self.N
        self.r = relations(w, n)
        vecs = [ri.to_vector(n) for ri in self.r]
        self.J = choose_independent(vecs)
        # lam[i][j]: coefficient of r_j (j in J) in r_i; r_j*(r_i) in the dual formulas
        self.lam: List[Dict[int, Fraction]] = []
        for i in range(n):
            if i in self.J:
                self.lam.append({i: Fraction(1)})
            elif not vecs[i]:
                self.lam.append({})
            else:
                self.lam.append(express(vecs, self.J, vecs[i]))
        self.cw = cyclic_sum(w)
        J = self.J
        jpos = {j: k for k, j in enumerate(J)}
        nJ = len(J)
        self.d1, self.d2 = koszul_differentials(n, [self.r[j] for j in J])

        # d_3(c(w)) = sum_i x_i (x) r_i (x) 1 - 1 (x) r_i (x) x_i, r_i written over J
        img3 = []
        for i in range(n):
            for j, a in sorted(self.lam[i].items()):
                img3.append((a, (i,), jpos[j], ()))
                img3.append((-a, (), jpos[j], (i,)))
        self.d3 = BimoduleMap([N + 1], [N] * nJ, [img3], "d3")

        # dual: d_1*(1*) = sum_i x_i (x) x_i* (x) 1 - 1 (x) x_i* (x) x_i
        self.d1s = BimoduleMap([0], [-1] * n,
                               [[t for i in range(n) for t in ((1, (i,), i, ()), (-1, (), i, (i,)))]],
                               "d1*")
        # d_2*(x_i*) = sum_{j in J} (dr_j/dx_i)_2 (x) r_j* (x) (dr_j/dx_i)_1
        img2s = []
        for i in range(n):
            img = []
            for j in J:
                for (u, v), c in sorted(partial_derivative(self.r[j], i).terms.items()):
                    img.append((c, v, jpos[j], u))
            img2s.append(img)
        self.d2s = BimoduleMap([-1] * n, [-N] * nJ, img2s, "d2*")
        # d_3*(r_i*) = sum_j r_i*(r_j) (x_j (x) c* (x) 1 - 1 (x) c* (x) x_j)
        img3s = []
        for i in J:
            img = []
            for j in range(n):
                a = self.lam[j].get(i)
                if a:
                    img.append((a, (j,), 0, ()))
                    img.append((-a, (), 0, (j,)))
            img3s.append(img)
        self.d3s = BimoduleMap([-N] * nJ, [-N - 1], img3s, "d3*")

        # comparison maps f_p: position p of C_w -> position p of the dual
        s = -N - 1
        self.f0 = BimoduleMap([0], [-N - 1], [[(1, (), 0, ())]], "f0", s)
        self.f1 = BimoduleMap([1] * n, [-N] * nJ,
                              [[(1, (), jpos[i], ())] if i in jpos else [] for i in range(n)], "f1", s)
        self.f2 = BimoduleMap([N] * nJ, [-1] * n, [[(1, (), j, ())] for j in J], "f2", s)
        self.f3 = BimoduleMap([N + 1], [0], [[(1, (), 0, ())]], "f3", s)

    @property
    def dim_R(self) -> int:
        return len(self.J)

    # chain differentials by position: out of position p
    def differential(self, p: int) -> BimoduleMap:
        return {1: self.d1, 2: self.d2, 3: self.d3}[p]

    def dual_differential(self, p: int) -> BimoduleMap:
        return {3: self.d1s, 2: self.d2s, 1: self.d3s}[p]

    def comparison(self, p: int) -> BimoduleMap:
        return (self.f0, self.f1, self.f2, self.f3)[p]

    def position_degrees(self, p: int) -> List[int]:
        N, n, nJ = self.N, self.n, len(self.J)
        return [[0], [1] * n, [N] * nJ, [N + 1]][p]

    def dual_position_degrees(self, p: int) -> List[int]:
        N, n, nJ = self.N, self.n, len(self.J)
        return [[-N - 1], [-N] * nJ, [-1] * n, [0]][p]


@dataclass
class DegreeComplex:
    """Matrices of C_w in internal degree d, and optionally of the dual
    complex in degree d-N-1 together with the comparison maps between them."""

    degree: int
    dims: Tuple[int, int, int, int]
    M1: RatMatrix
    M2: RatMatrix
    M3: RatMatrix
    dual_degree: Optional[int] = None
    dual_dims: Optional[Tuple[int, int, int, int]] = None
    M1s: Optional[RatMatrix] = None
    M2s: Optional[RatMatrix] = None
    M3s: Optional[RatMatrix] = None
    F: Optional[Tuple[RatMatrix, RatMatrix, RatMatrix, RatMatrix]] = None

    def is_complex(self) -> bool:
        ok = (self.M1 @ self.M2).is_zero() and (self.M2 @ self.M3).is_zero()
        if self.M1s is not None:
            ok = ok and (self.M2s @ self.M1s).is_zero() and (self.M3s @ self.M2s).is_zero()
        return ok


def _space_dim(gq, degrees, d):
    return BimoduleBasis(gq, degrees, d).dim


def complex_matrices(w: NcPoly, gq: GradedQuotient, d: int, pc: PotentialComplex | None = None) -> DegreeComplex:
    """M1, M2, M3 of C_w in internal degree d."""
    pc = pc or PotentialComplex(w, gq.n)
    if d > gq.D:
        raise ValueError("degree %d exceeds the bound %d" % (d, gq.D))
    dims = tuple(_space_dim(gq, pc.position_degrees(p), d) for p in range(4))
    return DegreeComplex(d, dims, pc.d1.matrix(gq, d), pc.d2.matrix(gq, d), pc.d3.matrix(gq, d))


@dataclass
class DualComplex:
    degree: int
    dims: Tuple[int, int, int, int]
    M1s: RatMatrix   # d_1*: position 3 -> 2
    M2s: RatMatrix   # d_2*: position 2 -> 1
    M3s: RatMatrix   # d_3*: position 1 -> 0
    J: Tuple[int, ...] = ()

    def is_complex(self) -> bool:
        return (self.M2s @ self.M1s).is_zero() and (self.M3s @ self.M2s).is_zero()


def dual_complex_matrices(w: NcPoly, gq: GradedQuotient, d: int, pc: PotentialComplex | None = None) -> DualComplex:
    """d_1*, d_2*, d_3* in degree d of the dual grading (k*, V*, R*, kc(w)*
    in degrees 0, -1, -N, -N-1)."""
    pc = pc or PotentialComplex(w, gq.n)
    dims = tuple(_space_dim(gq, pc.dual_position_degrees(p), d) for p in range(4))
    return DualComplex(d, dims, pc.d1s.matrix(gq, d), pc.d2s.matrix(gq, d), pc.d3s.matrix(gq, d),
                       tuple(pc.J))


@dataclass
class DualityCheck:
    degree: int
    F: Tuple[RatMatrix, RatMatrix, RatMatrix, RatMatrix]
    left: bool      # f_2 d_3 = d_1* f_3
    central: bool   # f_1 d_2 = d_2* f_2
    right: bool     # f_0 d_1 = d_3* f_1
    J: Tuple[int, ...]

    @property
    def all_commute(self) -> bool:
        return self.left and self.central and self.right


def duality_maps(w: NcPoly, gq: GradedQuotient, d: int, pc: PotentialComplex | None = None) -> DualityCheck:
    """Comparison matrices F0..F3 from C_w in degree d to the dual in degree
    d-N-1, and whether each of the three squares commutes there."""
    pc = pc or PotentialComplex(w, gq.n)
    s = -pc.N - 1
    F = tuple(pc.comparison(p).matrix(gq, d) for p in range(4))
    M1, M2, M3 = (pc.differential(p).matrix(gq, d) for p in (1, 2, 3))
    dd = d + s
    S3, S2, S1 = pc.d1s.matrix(gq, dd), pc.d2s.matrix(gq, dd), pc.d3s.matrix(gq, dd)
    left = F[2] @ M3 == S3 @ F[3]
    central = F[1] @ M2 == S2 @ F[2]
    right = F[0] @ M1 == S1 @ F[1]
    return DualityCheck(d, F, left, central, right, tuple(pc.J))


@dataclass
class ExactnessReport:
    """Homology dimensions of C_w by (degree, position).

    Position 0 is measured against the multiplication map onto A, so an
    exact row means C_w resolves A in that degree.
    """

    D: int
    homology: Dict[Tuple[int, int], int] = field(default_factory=dict)
    space_dims: Dict[Tuple[int, int], int] = field(default_factory=dict)
    ranks: Dict[Tuple[int, int], int] = field(default_factory=dict)
    is_complex: bool = True

    @property
    def first_failure(self) -> Optional[Tuple[int, int]]:
        for (d, p) in sorted(self.homology):
            if d >= 1 and self.homology[(d, p)]:
                return (d, p)
        return None

    @property
    def exact(self) -> bool:
        return self.first_failure is None

    def euler_characteristic(self, d: int, augmented: bool = True, algebra_dim: int = 0) -> int:
        chi = sum((-1) ** p * self.space_dims[(d, p)] for p in range(4))
        return chi - algebra_dim if augmented else chi

    def table(self) -> List[List[int]]:
        return [[self.homology[(d, p)] for p in range(4)] for d in range(self.D + 1)]


def exactness_report(w: NcPoly, gq: GradedQuotient, D: int, pc: PotentialComplex | None = None,
                     start: int = 0) -> ExactnessReport:
    pc = pc or PotentialComplex(w, gq.n)
    if D > gq.D:
        raise ValueError("degree %d exceeds the bound %d" % (D, gq.D))
    rep = ExactnessReport(D)
    for d in range(start, D + 1):
        dc = complex_matrices(w, gq, d, pc)
        r1, r2, r3 = dc.M1.rank(), dc.M2.rank(), dc.M3.rank()
        c0, c1, c2, c3 = dc.dims
        if not ((dc.M1 @ dc.M2).is_zero() and (dc.M2 @ dc.M3).is_zero()):
            rep.is_complex = False
        rep.homology[(d, 0)] = c0 - r1 - gq.dim(d)
        rep.homology[(d, 1)] = c1 - r1 - r2
        rep.homology[(d, 2)] = c2 - r2 - r3
        rep.homology[(d, 3)] = c3 - r3
        for p, c in enumerate(dc.dims):
            rep.space_dims[(d, p)] = c
        rep.ranks.update({(d, 1): r1, (d, 2): r2, (d, 3): r3})
    return rep


@dataclass
class HochschildDims:
    """Homology of A (x)_{A^e} C_w (degree d) and of A (x)_{A^e} C_w^dual
    (degree d - N - 1) for d = 0..D, keyed by (position, degree)."""

    N: int
    D: int
    homology: Dict[Tuple[int, int], int]
    dual_homology: Dict[Tuple[int, int], int]
    complete: bool   # False: only positions 0 and 1 compute Hochschild (co)homology

    def shifted_duality_holds(self) -> bool:
        s = self.N + 1
        return all(self.dual_homology.get((p, d - s)) == h for (p, d), h in self.homology.items())


def hochschild_dims(w: NcPoly, gq: GradedQuotient, D: int, pc: PotentialComplex | None = None,
                    exact: bool | None = None) -> HochschildDims:
    pc = pc or PotentialComplex(w, gq.n)
    if D > gq.D:
        raise ValueError("degree %d exceeds the bound %d" % (D, gq.D))
    s = -pc.N - 1
    hom: Dict[Tuple[int, int], int] = {}
    dual: Dict[Tuple[int, int], int] = {}
    for d in range(D + 1):
        dims = [TraceBasis(gq, pc.position_degrees(p), d).dim for p in range(4)]
        rk = {p: pc.differential(p).trace_matrix(gq, d).rank() for p in (1, 2, 3)}
        rk[0] = rk[4] = 0
        for p in range(4):
            hom[(p, d)] = dims[p] - rk[p] - rk[p + 1]
        dd = d + s
        ddims = [TraceBasis(gq, pc.dual_position_degrees(p), dd).dim for p in range(4)]
        # dual differential out of position p lands in p-1
        drk = {p: pc.dual_differential(p).trace_matrix(gq, dd).rank() for p in (1, 2, 3)}
        drk[0] = drk[4] = 0
        for p in range(4):
            dual[(p, dd)] = ddims[p] - drk[p] - drk[p + 1]
    if exact is None:
        exact = exactness_report(w, gq, D, pc).exact
    return HochschildDims(pc.N, D, hom, dual, exact)
