"""Constructors for the standard example potentials, used as fixtures."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .exactla import inverse, is_invertible
from .ncpoly import NcPoly, commutator

CY3 = "CY3"
NOT_CY3 = "NOT_CY3"
CONDITIONAL = "conditional"

# Fano plane lines, 1-based; z = x7 is the distinguished variable
FANO_LINES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))
# orientation found by search_orientation(FANO_LINES), frozen here
FANO_ORIENTATION = FANO_LINES


@dataclass
class ExampleSpec:
    family: str
    params: Dict[str, object]
    n: int
    N: int
    tag: str
    # largest degree bound that keeps the full report at desk scale
    recommended_D: int
    note: str = ""
    gens: List[str] = field(default_factory=list)


def _gens(n: int) -> List[str]:
    if n == 3:
        return ["x", "y", "z"]
    if n == 2:
        return ["x", "y"]
    if n == 1:
        return ["x"]
    return ["x%d" % (i + 1) for i in range(n)]


def _sign(perm: Sequence[int]) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def antisymmetrizer(n: int = 3):
    """w = Ant(x_1..x_{n-1}) x_n, the full signed sum over S_{n-1}."""
    n = int(n)
    if n < 3:
        raise ValueError("antisymmetrizer needs n >= 3")
    terms = {}
    for p in permutations(range(n - 1)):
        terms[tuple(p) + (n - 1,)] = Fraction(_sign(p))
    w = NcPoly(terms)
    if n % 2:
        tag, note = CY3, ""
    else:
        tag, note = CONDITIONAL, "even n: the algebra is not derived from this potential"
    D = {3: 6, 5: 5}.get(n, n)
    return w, ExampleSpec("antisymmetrizer", {"n": n}, n, n - 1, tag, D, note, _gens(n))


def sklyanin(alpha=1, beta=1, gamma=1):
    """w = a xyz + b yxz + c (x^3 + y^3 + z^3)."""
    a, b, c = Fraction(alpha), Fraction(beta), Fraction(gamma)
    x, y, z = (NcPoly.gen(i) for i in range(3))
    w = a * x * y * z + b * y * x * z + c * (x ** 3 + y ** 3 + z ** 3)
    coordinate = sum(1 for v in (a, b, c) if v) == 1
    fermat = a ** 3 == b ** 3 == 27 * c ** 3
    if not w:
        raise ValueError("all parameters zero")
    if coordinate or fermat:
        tag, note = CONDITIONAL, "parameters in the excluded set"
    else:
        tag, note = CY3, ""
    return w, ExampleSpec("sklyanin", {"alpha": a, "beta": b, "gamma": c}, 3, 2, tag, 6, note,
                          _gens(3))


def cubic_typeA(alpha=1, beta=1, gamma=1):
    """w = a x^2y^2 + b (xy)^2 + c (x^4 + y^4)."""
    a, b, c = Fraction(alpha), Fraction(beta), Fraction(gamma)
    x, y = NcPoly.gen(0), NcPoly.gen(1)
    w = a * x * x * y * y + b * (x * y) ** 2 + c * (x ** 4 + y ** 4)
    if not w:
        raise ValueError("all parameters zero")
    excluded = (a ** 2 == 4 * b ** 2 == 16 * c ** 2) or (a == c == 0) or (a == b == 0)
    tag, note = (CONDITIONAL, "parameters in the excluded set") if excluded else (CY3, "")
    return w, ExampleSpec("cubic_typeA", {"alpha": a, "beta": b, "gamma": c}, 2, 3, tag, 8, note,
                          _gens(2))


def yang_mills(n: int = 3, lam=0, g: Optional[Sequence[Sequence[object]]] = None):
    """w = w1 + lam w2 with w1 = sum g^{ip} g^{jq} [x_i,x_j][x_p,x_q], w2 = (sum g^{ij} x_i x_j)^2.

    g is the metric; its inverse supplies the raised indices.
    """
    n = int(n)
    lam = Fraction(lam)
    if g is None:
        g = [[int(i == j) for j in range(n)] for i in range(n)]
    g = [[Fraction(v) for v in r] for r in g]
    if len(g) != n or any(len(r) != n for r in g):
        raise ValueError("metric must be %dx%d" % (n, n))
    if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)) or not is_invertible(g):
        raise ValueError("metric must be symmetric and invertible")
    gi = inverse(g)
    X = [NcPoly.gen(i) for i in range(n)]
    C = [[commutator(X[i], X[j]) for j in range(n)] for i in range(n)]
    w1 = NcPoly.zero()
    for i, j, p, q in product(range(n), repeat=4):
        k = gi[i][p] * gi[j][q]
        if k:
            w1 = w1 + k * (C[i][j] * C[p][q])
    q2 = NcPoly.zero()
    for i, j in product(range(n), repeat=2):
        if gi[i][j]:
            q2 = q2 + gi[i][j] * (X[i] * X[j])
    w = w1 + lam * (q2 * q2)
    if lam == Fraction(n - 1, n + 1):
        tag, note = CONDITIONAL, "lambda = (n-1)/(n+1) is excluded"
    else:
        tag, note = CY3, ""
    if not w:
        raise ValueError("potential vanishes")
    return w, ExampleSpec("yang_mills", {"n": n, "lambda": lam, "g": g}, n, 3, tag, 6, note,
                          _gens(n))


def potencyN(N: int = 2, n: int = 1):
    """w = x_1^{N+1}, optionally inside n variables."""
    N, n = int(N), int(n)
    if N < 2 or n < 1:
        raise ValueError("need N >= 2 and n >= 1")
    w = NcPoly.gen(0) ** (N + 1)
    return w, ExampleSpec("potencyN", {"N": N, "n": n}, n, N, NOT_CY3, 2 * (N + 1) + 2, "",
                          _gens(n))


def steiner_potential(triples: Sequence[Tuple[int, int, int]]) -> NcPoly:
    """Sum of (x_i x_j - x_j x_i) x_k over 1-based oriented triples (i, j, k)."""
    w = NcPoly.zero()
    for i, j, k in triples:
        w = w + commutator(NcPoly.gen(i - 1), NcPoly.gen(j - 1)) * NcPoly.gen(k - 1)
    return w


def _is_steiner(triples, n) -> bool:
    seen = set()
    for t in triples:
        if len(set(t)) != 3 or not all(1 <= v <= n for v in t):
            return False
        for a, b in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            pair = frozenset((a, b))
            if pair in seen:
                return False
            seen.add(pair)
    return len(seen) == n * (n - 1) // 2


def steiner(triples, n: Optional[int] = None):
    triples = [tuple(int(v) for v in t) for t in triples]
    if n is None:
        n = max(max(t) for t in triples)
    w = steiner_potential(triples)
    note = "" if _is_steiner(triples, n) else "not a Steiner triple system"
    return w, ExampleSpec("steiner", {"triples": triples, "n": n}, n, 2, CONDITIONAL, 3,
                          note or "orientation not certified", _gens(n))


def steiner_fano():
    w = steiner_potential(FANO_ORIENTATION)
    return w, ExampleSpec("steiner_fano", {"triples": [list(t) for t in FANO_ORIENTATION]}, 7, 2,
                          CY3, 3, "z = x7", _gens(7))


def quadric_uz(U):
    """w = u z for u = sum U[i][j] x_i x_j; z is the last generator."""
    U = [[Fraction(v) for v in r] for r in U]
    n = len(U)
    u = NcPoly({(i, j): U[i][j] for i in range(n) for j in range(n) if U[i][j]})
    if not u:
        raise ValueError("quadratic form vanishes")
    w = u * NcPoly.gen(n)
    if is_invertible(U):
        tag, note = CY3, ""
    else:
        tag, note = CONDITIONAL, "degenerate quadric"
    return w, ExampleSpec("quadric_uz", {"U": U}, n + 1, 2, tag, 5, note,
                          _gens(n + 1))


FAMILIES = {
    "antisymmetrizer": antisymmetrizer,
    "sklyanin": sklyanin,
    "cubic_typeA": cubic_typeA,
    "yang_mills": yang_mills,
    "potencyN": potencyN,
    "steiner": steiner,
    "steiner_fano": steiner_fano,
    "quadric_uz": quadric_uz,
}


def example(name: str, *params, **kw):
    """(potential, ExampleSpec) for a named family."""
    try:
        fn = FAMILIES[name]
    except KeyError:
        raise ValueError("unknown example family %r (known: %s)"
                         % (name, ", ".join(sorted(FAMILIES)))) from None
    return fn(*params, **kw)


def orientations(triples):
    """All 2^k choices of orientation, flipping the first two entries of a triple."""
    for flips in product((False, True), repeat=len(triples)):
        yield [(t[1], t[0], t[2]) if f else tuple(t) for t, f in zip(triples, flips)]


def search_orientation(triples=FANO_LINES, D: int = 3, first: bool = True):
    """Orientations whose potential passes the criterion through degree D."""
    from .criterion import cy3_report

    n = max(max(t) for t in triples)
    hits = []
    for tr in orientations(triples):
        rep = cy3_report(steiner_potential(tr), n, D, exactness=False)
        if not rep.verdict.refuted:
            hits.append(tr)
            if first:
                break
    return hits
