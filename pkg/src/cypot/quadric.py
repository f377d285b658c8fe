"""Non-commutative quadrics and the cubic potentials built over them.

For an invertible matrix U, u = sum U[i][j] x_i x_j defines the quadric
Gamma = k<x_1..x_n>/(u).  Adding a generator z (index n) gives the potential
w = u z, whose algebra satisfies z x_i = sigma(x_i) z with
sigma(x_i) = sum_j S[i][j] x_j and S = -(U^T)^{-1} U.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .complexes import BimoduleBasis, BimoduleMap, koszul_differentials
from .criterion import CriterionReport, cy3_report, relation_space
from .exactla import RatMatrix, inverse, is_invertible, solve
from .grading import GradedQuotient
from .ncpoly import NcPoly, cyclic_derivative

Matrix = List[List[Fraction]]


class DegenerateQuadric(ValueError):
    pass


def as_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    m = [[Fraction(a) for a in r] for r in rows]
    if any(len(r) != len(m) for r in m):
        raise ValueError("matrix must be square")
    return m


def transpose(a: Matrix) -> Matrix:
    return [list(r) for r in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in bt] for r in a]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for r in a for x in r)


def quadratic_form(U: Matrix) -> NcPoly:
    """u = sum U[i][j] x_i x_j."""
    n = len(U)
    return NcPoly({(i, j): U[i][j] for i in range(n) for j in range(n) if U[i][j]})


def matrix_of_quadratic(u: NcPoly, n: int) -> Matrix:
    U = [[Fraction(0)] * n for _ in range(n)]
    for w, c in u.terms.items():
        if len(w) != 2 or max(w) >= n:
            raise ValueError("not a quadratic form in x_1..x_%d" % n)
        U[w[0]][w[1]] += c
    return U


def uz_potential(U: Matrix) -> NcPoly:
    n = len(U)
    return quadratic_form(U) * NcPoly.gen(n)


def _require_invertible(U: Matrix):
    if not is_invertible(U):
        raise DegenerateQuadric("degenerate quadric: U is singular")


def sigma_matrix(U: Matrix) -> Matrix:
    """S = -(U^T)^{-1} U."""
    _require_invertible(U)
    S = matmul(inverse(transpose(U)), U)
    return [[-a for a in r] for r in S]


def sigma_images(S: Matrix) -> List[NcPoly]:
    n = len(S)
    return [NcPoly({(j,): S[i][j] for j in range(n) if S[i][j]}) for i in range(n)]


@dataclass
class QuadricData:
    U: Matrix
    S: Matrix
    u: NcPoly
    dims: List[int]
    target: List[int]
    gamma: GradedQuotient = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.U)

    @property
    def hilbert_ok(self) -> bool:
        return self.dims == self.target


def gamma_series(n: int, D: int) -> List[int]:
    """Coefficients of 1/(1 - n t + t^2)."""
    g: List[int] = []
    for d in range(D + 1):
        v = 1 if d == 0 else n * g[d - 1]
        if d >= 2:
            v -= g[d - 2]
        g.append(v)
    return g


def quadric_algebra(U, D: int = 5) -> QuadricData:
    U = as_matrix(U)
    _require_invertible(U)
    u = quadratic_form(U)
    gq = GradedQuotient(len(U), [u], D)
    return QuadricData(U, sigma_matrix(U), u, gq.dims, gamma_series(len(U), D), gq)


@dataclass
class SigmaReport:
    S: Matrix
    relations_hold: bool     # z x_i - sigma(x_i) z = 0 in A(uz)_2 for every i


def sigma_of(U) -> SigmaReport:
    U = as_matrix(U)
    S = sigma_matrix(U)
    n = len(U)
    w = uz_potential(U)
    A = GradedQuotient.from_potential(w, n + 1, 2)
    z = NcPoly.gen(n)
    ok = all(A.is_zero(z * NcPoly.gen(i) - s * z) for i, s in enumerate(sigma_images(S)))
    return SigmaReport(S, ok)


# -- the Koszul complex of Gamma and its dual --------------------------------

def gamma_maps(U: Matrix):
    """d_1, d_2 of Gamma's Koszul complex and d_1*, d_2* of its dual."""
    n = len(U)
    u = quadratic_form(U)
    d1, d2 = koszul_differentials(n, [u])
    d1s = BimoduleMap([0], [-1] * n,
                      [[t for i in range(n) for t in ((1, (i,), i, ()), (-1, (), i, (i,)))]], "d1*G")
    # d_2*(x_i*) = sum_j u_ij x_j (x) u* (x) 1 + u_ji 1 (x) u* (x) x_j
    imgs = []
    for i in range(n):
        img = []
        for j in range(n):
            if U[i][j]:
                img.append((U[i][j], (j,), 0, ()))
            if U[j][i]:
                img.append((U[j][i], (), 0, (j,)))
        imgs.append(img)
    d2s = BimoduleMap([-1] * n, [-2], imgs, "d2*G")
    return d1, d2, d1s, d2s


def mu_matrix(gamma: GradedQuotient, S: Matrix, d: int) -> RatMatrix:
    """mu_u(a (x) u* (x) b) = a sigma(b), from (Gamma R* Gamma)_d to Gamma_{d+2}."""
    src = BimoduleBasis(gamma, [-2], d)
    sig = sigma_images(S)
    tdim = gamma.dim(d + 2)
    cols = []
    for (i, _, j), _, (ni, nj) in src.blocks:
        for ka in range(ni):
            a = gamma.normal[i][ka]
            for kb in range(nj):
                b = gamma.normal[j][kb]
                img = NcPoly.word(a) * NcPoly.word(b).substitute(sig)
                cols.append(gamma.reduce(img).get(d + 2, {}))
    return RatMatrix.from_columns(cols, tdim)


@dataclass
class GammaComplexReport:
    D: int
    koszul_homology: Dict[tuple, int]   # (degree, position) for positions 0 (augmented), 1, 2
    dual_homology: Dict[tuple, int]     # (degree, position) for k* = 0, V* = 1, R* = 2
    is_complex: bool
    coker_matches: bool                 # dim coker d_2* in degree d equals dim Gamma_{d+2}

    @property
    def koszul_exact(self) -> bool:
        return all(h == 0 for (d, p), h in self.koszul_homology.items() if d >= 1)


def gamma_complex_check(U, D: int = 5) -> GammaComplexReport:
    U = as_matrix(U)
    _require_invertible(U)
    n = len(U)
    gamma = GradedQuotient(n, [quadratic_form(U)], D + 2)
    d1, d2, d1s, d2s = gamma_maps(U)
    kos, dual = {}, {}
    is_cx = True
    coker_ok = True
    for d in range(D + 1):
        M1, M2 = d1.matrix(gamma, d), d2.matrix(gamma, d)
        c0 = BimoduleBasis(gamma, [0], d).dim
        c1 = BimoduleBasis(gamma, [1] * n, d).dim
        c2 = BimoduleBasis(gamma, [2], d).dim
        r1, r2 = M1.rank(), M2.rank()
        is_cx &= (M1 @ M2).is_zero()
        kos[(d, 0)] = c0 - r1 - gamma.dim(d)
        kos[(d, 1)] = c1 - r1 - r2
        kos[(d, 2)] = c2 - r2
    for d in range(-2, D + 1):
        S1, S2 = d1s.matrix(gamma, d), d2s.matrix(gamma, d)
        e0 = BimoduleBasis(gamma, [0], d).dim
        e1 = BimoduleBasis(gamma, [-1] * n, d).dim
        e2 = BimoduleBasis(gamma, [-2], d).dim
        s1, s2 = S1.rank(), S2.rank()
        is_cx &= (S2 @ S1).is_zero()
        dual[(d, 0)] = e0 - s1
        dual[(d, 1)] = e1 - s1 - s2
        dual[(d, 2)] = e2 - s2
        coker_ok &= dual[(d, 2)] == gamma.dim(d + 2)
    return GammaComplexReport(D, kos, dual, is_cx, coker_ok)


@dataclass
class NakayamaReport:
    S: Matrix
    x_vanishes: bool          # U + U^T S = 0
    sigma_preserves_u: bool   # S^T U S = U
    mu_kills_image: Dict[int, bool] = field(default_factory=dict)
    kernel_equals_image: Dict[int, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.x_vanishes and self.sigma_preserves_u
                and all(self.mu_kills_image.values()) and all(self.kernel_equals_image.values()))


def nakayama_check(U, D: int = 4) -> NakayamaReport:
    """ker mu_u = im d_2* in (Gamma R* Gamma)_d for -2 <= d <= D."""
    U = as_matrix(U)
    S = sigma_matrix(U)
    n = len(U)
    UT = transpose(U)
    rep = NakayamaReport(
        S,
        x_vanishes=is_zero([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(U, matmul(UT, S))]),
        sigma_preserves_u=matmul(matmul(transpose(S), U), S) == U,
    )
    gamma = GradedQuotient(n, [quadratic_form(U)], D + 2)
    _, _, _, d2s = gamma_maps(U)
    for d in range(-2, D + 1):
        mu = mu_matrix(gamma, S, d)
        im = d2s.matrix(gamma, d)
        rep.mu_kills_image[d] = (mu @ im).is_zero()
        rep.kernel_equals_image[d] = mu.ncols - mu.rank() == im.rank()
    return rep


# -- Ore extensions -----------------------------------------------------------

@dataclass
class OreReport:
    hypothesis_ok: bool
    reason: str = ""
    U: Optional[Matrix] = None
    hilbert: List[int] = field(default_factory=list)
    gamma_dims: List[int] = field(default_factory=list)
    prefix_sums: List[int] = field(default_factory=list)
    hilbert_factorizes: bool = False
    sigma: Optional[Matrix] = None
    delta: List[NcPoly] = field(default_factory=list)
    ore_relations_hold: bool = False
    criterion: Optional[CriterionReport] = None


def extract_sigma_delta(w: NcPoly, n: int):
    """Solve z x_i = sum_j s_ij x_j z + delta_i (mod R) in degree 2.

    Returns (S, deltas) or None.  z is generator n; delta_i is a quadratic
    polynomial in x_1..x_n.  Free unknowns are set to zero.
    """
    m = n + 1
    R = relation_space(w, m)
    cols = [NcPoly.word((j, n)).to_vector(m) for j in range(n)]
    quad = [(a, b) for a in range(n) for b in range(n)]
    cols += [NcPoly.word(q).to_vector(m) for q in quad]
    cols += [dict(r) for r in R.rows]
    M = RatMatrix.from_columns(cols, m * m)
    S, deltas = [], []
    for i in range(n):
        sol = solve(M, NcPoly.word((n, i)).to_vector(m))
        if sol is None:
            return None
        S.append([sol.get(j, Fraction(0)) for j in range(n)])
        deltas.append(NcPoly({q: sol.get(n + k, 0) for k, q in enumerate(quad)}))
    return S, deltas


def ore_check(w: NcPoly, n: int, D: int = 5, U=None) -> OreReport:
    """Instance-level check that A(w) looks like Gamma[z; sigma, delta].

    ``n`` counts the x variables; w lives in n+1 variables with z last.  If
    U is omitted it is read off from the cyclic derivative of w in z.
    """
    m = n + 1
    if not w or not w.is_homogeneous() or w.degree != 3 or w.max_letter() >= m:
        return OreReport(False, "w must be a cubic potential in %d variables" % m)
    if U is None:
        u = cyclic_derivative(w, n)
        try:
            U = matrix_of_quadratic(u, n)
        except ValueError:
            return OreReport(False, "the z-derivative of w involves z")
    U = as_matrix(U)
    if not is_invertible(U):
        return OreReport(False, "degenerate quadric: U is singular", U=U)
    rep = OreReport(True, U=U)
    gamma = GradedQuotient(n, [quadratic_form(U)], D)
    A = GradedQuotient.from_potential(w, m, D)
    rep.hilbert = A.dims
    rep.gamma_dims = gamma.dims
    acc = 0
    for g in gamma.dims:
        acc += g
        rep.prefix_sums.append(acc)
    rep.hilbert_factorizes = rep.hilbert == rep.prefix_sums
    ext = extract_sigma_delta(w, n)
    if ext is None:
        rep.hypothesis_ok = False
        rep.reason = "no (sigma, delta) solves the degree-2 relations"
    else:
        rep.sigma, rep.delta = ext
        z = NcPoly.gen(n)
        rep.ore_relations_hold = all(
            A.is_zero(z * NcPoly.gen(i) - s * z - dl)
            for i, (s, dl) in enumerate(zip(sigma_images(rep.sigma), rep.delta)))
    rep.criterion = cy3_report(w, m, D, gq=A)
    return rep
