"""Degreewise model of a quotient T(V)/I of the free algebra by homogeneous relations.

The quotient is built one degree at a time.  In degree d every word is
either *normal* (a basis element of A_d) or reducible, and reducible words
are rewritten as combinations of larger normal words.  The normal words are
exactly the non-pivot columns of the reduced echelon basis of I_d in the
global word order, so the model agrees with the direct span construction of
:func:`ideal_component`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Sequence, Tuple

from .exactla import Echelon, Subspace, echelon_basis
from .ncpoly import NcPoly, Word, relations, word_index

Coords = Dict[int, Fraction]


def ideal_component(R: Subspace, d: int) -> Subspace:
    """Degree-d part of the two-sided ideal generated by R in V^{(x)N}.

    Spans all u*r*v for words u, v with |u| + |v| = d - N; used as the direct
    (slow) route and as a cross-check of :class:`GradedQuotient`.
    """
    n, N = R.n, R.ambient_degree
    if n is None or N is None:
        raise ValueError("R must live in a tensor power (set n and ambient_degree)")
    if d < N:
        return Subspace(n ** d, (), d, n)
    gens = []
    for i in range(d - N + 1):
        j = d - N - i
        left = n ** (d - i)   # stride of the prefix u
        right = n ** j
        for u in range(n ** i):
            for v in range(right):
                for r in R.rows:
                    gens.append({u * left + c * right + v: a for c, a in r.items()})
    return echelon_basis(gens, n ** d, ambient_degree=d, n=n)


class GradedQuotient:
    """A = T(V)/I(relations) truncated at degree D.

    ``normal[d]`` lists the normal words of degree d in word order and
    ``dims[d] == len(normal[d])``.  :meth:`reduce_word` returns the
    coordinates of any word over ``normal[len(word)]``.
    """

    def __init__(self, n: int, rels: Sequence[NcPoly], D: int):
        if D < 0:
            raise ValueError("degree bound must be >= 0")
        rels = [r for r in rels if r]
        degs = {r.degree for r in rels}
        if len(degs) > 1:
            raise ValueError("relations must all have the same degree")
        self.n = n
        self.D = D
        self.N = degs.pop() if degs else None
        if self.N is not None and self.N < 1:
            raise ValueError("relations must have positive degree")
        self.relation_space = None
        if self.N is not None:
            self.relation_space = echelon_basis([r.to_vector(n) for r in rels], n ** self.N,
                                                ambient_degree=self.N, n=n)
        self.rel_polys = [NcPoly.from_vector(r, n, self.N) for r in self.relation_space.rows] \
            if self.relation_space is not None else []
        self.normal: List[List[Word]] = []
        self.index: List[Dict[Word, int]] = []
        # per degree: reducible candidate word -> coordinates over normal words
        self._rewrite: List[Dict[Word, Coords]] = []
        self._cache: List[Dict[Word, Coords]] = []
        self._mult: Dict[Tuple[int, int], object] = {}
        for d in range(D + 1):
            self._build_degree(d)

    @classmethod
    def from_potential(cls, w: NcPoly, n: int, D: int) -> "GradedQuotient":
        return cls(n, relations(w, n), D)

    # -- construction ------------------------------------------------------
    def _build_degree(self, d: int):
        n = self.n
        if d == 0:
            normal = [()]
            rewrite: Dict[Word, Coords] = {}
        elif self.N is None or d < self.N:
            normal = list(product(range(n), repeat=d))
            rewrite = {}
        else:
            # candidates x*m with m normal of degree d-1 span V (x) A_{d-1}
            prev = self.normal[d - 1]
            cand = [(x,) + m for x in range(n) for m in prev]
            mprev = len(prev)
            ech = Echelon("min")
            for r in self.rel_polys:
                for m in self.normal[d - self.N]:
                    vec: Coords = {}
                    for word, c in r.terms.items():
                        x, tail = word[0], word[1:] + m
                        base = x * mprev
                        for k, a in self.reduce_word(tail).items():
                            key = base + k
                            val = vec.get(key, 0) + c * a
                            if val:
                                vec[key] = val
                            else:
                                vec.pop(key, None)
                    if vec:
                        ech.add(vec)
            rows = ech.reduced_rows()
            piv = {min(r): r for r in rows}
            normal = [w for i, w in enumerate(cand) if i not in piv]
            nidx = {w: i for i, w in enumerate(normal)}
            rewrite = {}
            for p, row in piv.items():
                rewrite[cand[p]] = {nidx[cand[c]]: -a for c, a in row.items() if c != p}
        self.normal.append(normal)
        self.index.append({w: i for i, w in enumerate(normal)})
        self._rewrite.append(rewrite)
        self._cache.append({})

    # -- queries -----------------------------------------------------------
    @property
    def dims(self) -> List[int]:
        return [len(b) for b in self.normal]

    def dim(self, d: int) -> int:
        return len(self.normal[d]) if 0 <= d <= self.D else self._out_of_range(d)

    def _out_of_range(self, d):
        if d < 0:
            return 0
        raise ValueError("degree %d exceeds the bound %d" % (d, self.D))

    def is_normal(self, word: Word) -> bool:
        return tuple(word) in self.index[len(word)]

    def reduce_word(self, word: Sequence[int]) -> Coords:
        """Coordinates of a word over the normal words of its degree."""
        word = tuple(word)
        d = len(word)
        if d > self.D:
            raise ValueError("degree %d exceeds the bound %d" % (d, self.D))
        i = self.index[d].get(word)
        if i is not None:
            return {i: Fraction(1)}
        cache = self._cache[d]
        hit = cache.get(word)
        if hit is not None:
            return hit
        x, tail = word[0], word[1:]
        rw = self._rewrite[d]
        idx = self.index[d]
        out: Coords = {}
        prev = self.normal[d - 1]
        for k, a in self.reduce_word(tail).items():
            cw = (x,) + prev[k]
            j = idx.get(cw)
            if j is not None:
                terms = {j: Fraction(1)}
            else:
                terms = rw[cw]
            for jj, b in terms.items():
                val = out.get(jj, 0) + a * b
                if val:
                    out[jj] = val
                else:
                    out.pop(jj, None)
        cache[word] = out
        return out

    def reduce(self, p: NcPoly) -> Dict[int, Coords]:
        """Normal form of a polynomial, as {degree: coordinates}."""
        out: Dict[int, Coords] = {}
        for word, c in p.terms.items():
            acc = out.setdefault(len(word), {})
            for k, a in self.reduce_word(word).items():
                val = acc.get(k, 0) + c * a
                if val:
                    acc[k] = val
                else:
                    acc.pop(k, None)
        return {d: v for d, v in out.items() if v}

    def is_zero(self, p: NcPoly) -> bool:
        return not self.reduce(p)

    def to_poly(self, d: int, coords: Coords) -> NcPoly:
        return NcPoly({self.normal[d][k]: a for k, a in coords.items()})

    def multiply(self, a: Word, b: Word) -> Coords:
        """Product of two normal words, reduced."""
        return self.reduce_word(tuple(a) + tuple(b))

    def multiplication_table(self, i: int, j: int):
        """Cached map (k, l) -> coordinates of normal[i][k] * normal[j][l]."""
        key = (i, j)
        tab = self._mult.get(key)
        if tab is None:
            tab = {(k, l): self.reduce_word(a + b)
                   for k, a in enumerate(self.normal[i]) for l, b in enumerate(self.normal[j])}
            self._mult[key] = tab
        return tab

    def ideal(self, d: int) -> Subspace:
        """Reduced echelon basis of I_d, read off from the rewriting data."""
        n = self.n
        rows = []
        nd = self.normal[d]
        for w in product(range(n), repeat=d):
            if w in self.index[d]:
                continue
            r = {word_index(w, n): Fraction(1)}
            for k, a in self.reduce_word(w).items():
                r[word_index(nd[k], n)] = -a
            rows.append(r)
        rows.sort(key=min)
        return Subspace(n ** d, rows, d, n)


def graded_quotient(w: NcPoly, n: int, D: int) -> GradedQuotient:
    """The potential algebra A(w) up to degree D."""
    return GradedQuotient.from_potential(w, n, D)


def hilbert_dims(w: NcPoly, n: int, D: int) -> List[int]:
    return graded_quotient(w, n, D).dims


@dataclass(frozen=True)
class SeriesSpec:
    n: int
    N: int
    D: int
    coefficients: Tuple[int, ...]


def target_series(n: int, N: int, D: int) -> SeriesSpec:
    """Coefficients of 1/(1 - n t + n t^N - t^(N+1)) through t^D."""
    if n < 1 or N < 2:
        raise ValueError("need n >= 1 and N >= 2")
    a: List[int] = []
    for d in range(D + 1):
        if d == 0:
            a.append(1)
            continue
        v = n * a[d - 1]
        if d - N >= 0:
            v -= n * a[d - N]
        if d - N - 1 >= 0:
            v += a[d - N - 1]
        a.append(v)
    return SeriesSpec(n, N, D, tuple(a))


def series_coefficients(denominator: Sequence[int], D: int) -> List[int]:
    """Power series of 1/p(t) through t^D for an integer polynomial with p(0)=1."""
    if not denominator or denominator[0] != 1:
        raise ValueError("constant term must be 1")
    a: List[int] = []
    for d in range(D + 1):
        v = 1 if d == 0 else 0
        for k in range(1, min(d, len(denominator) - 1) + 1):
            v -= denominator[k] * a[d - k]
        a.append(v)
    return a
