"""Free associative algebra over Q: words, polynomials, tensor-split elements.

Words are tuples of generator indices.  The empty tuple is the unit.  All
coefficients are ``fractions.Fraction`` and zero coefficients are never
stored, so two polynomials are equal iff their term dicts are equal.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

Word = Tuple[int, ...]


def word_key(word: Sequence[int]):
    """Sort key of the global word order: degree first, then lexicographic."""
    return (len(word), tuple(word))


def words_of_degree(n: int, d: int) -> Iterator[Word]:
    """All words of length d in n letters, in increasing word order."""
    return product(range(n), repeat=d)


def word_index(word: Sequence[int], n: int) -> int:
    """Coordinate of ``word`` inside V^{(x)d} (base-n reading)."""
    i = 0
    for a in word:
        i = i * n + a
    return i


def index_word(i: int, n: int, d: int) -> Word:
    letters = []
    for _ in range(d):
        i, a = divmod(i, n)
        letters.append(a)
    return tuple(reversed(letters))


def rotations(word: Word) -> Iterator[Word]:
    for i in range(len(word)):
        yield word[i:] + word[:i]


class GenSet:
    """Ordered set of degree-one generators."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("need at least one generator")
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct: %r" % (names,))
        self.names = names
        self._index = {s: i for i, s in enumerate(names)}

    @classmethod
    def numbered(cls, n: int, prefix: str = "x") -> "GenSet":
        return cls("%s%d" % (prefix, i + 1) for i in range(n))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name):
        return name in self._index

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, GenSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "GenSet(%r)" % (self.names,)


def _clean(terms):
    return {k: v for k, v in terms.items() if v != 0}


class NcPoly:
    """Finite Q-linear combination of words (an element of T(V))."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        t = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c:
                    w = tuple(w)
                    t[w] = t.get(w, 0) + c
        self.terms: Dict[Word, Fraction] = _clean(t)

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def word(cls, word: Sequence[int], coeff=1) -> "NcPoly":
        return cls({tuple(word): coeff})

    @classmethod
    def gen(cls, i: int) -> "NcPoly":
        return cls({(i,): 1})

    @classmethod
    def one(cls) -> "NcPoly":
        return cls({(): 1})

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls._raw({})

    # -- structure ---------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: word_key(kv[0])))

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == NcPoly.one() * other
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degrees(self):
        return sorted({len(w) for w in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("degree is defined for nonzero homogeneous polynomials")
        return ds[0]

    def max_letter(self) -> int:
        return max((a for w in self.terms for a in w), default=-1)

    def coeff(self, word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + c
        return NcPoly._raw(_clean(t))

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return NcPoly.zero()
            return NcPoly._raw({w: c * other for w, c in self.terms.items()})
        other = _as_poly(other)
        t: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                t[w] = t.get(w, 0) + c1 * c2
        return NcPoly._raw(_clean(t))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return _as_poly(other) * self

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = NcPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def map_words(self, f) -> "NcPoly":
        """Apply a word -> word map linearly."""
        t: Dict[Word, Fraction] = {}
        for w, c in self.terms.items():
            w2 = f(w)
            t[w2] = t.get(w2, 0) + c
        return NcPoly._raw(_clean(t))

    def substitute(self, images: Sequence["NcPoly"]) -> "NcPoly":
        """Algebra endomorphism x_i -> images[i], extended multiplicatively."""
        out = NcPoly.zero()
        for w, c in self.terms.items():
            p = NcPoly.one()
            for a in w:
                p = p * images[a]
            out = out + p * c
        return out

    def to_vector(self, n: int) -> Dict[int, Fraction]:
        """Sparse coordinates in V^{(x)d}; requires homogeneity."""
        return {word_index(w, n): c for w, c in self.terms.items()}

    @classmethod
    def from_vector(cls, vec: Mapping[int, object], n: int, d: int) -> "NcPoly":
        return cls({index_word(i, n, d): c for i, c in vec.items()})

    # -- printing ----------------------------------------------------------
    def format(self, gens: GenSet | None = None) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for w, c in self:
            body = _format_word(w, gens)
            mag = abs(c)
            if not w:
                s = _fmt_rat(mag)
            elif mag == 1:
                s = body
            else:
                s = "%s*%s" % (_fmt_rat(mag), body)
            pieces.append(("-" if c < 0 else "+", s))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, s in pieces[1:]:
            out += " %s %s" % (sign, s)
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "NcPoly(%s)" % self.format()


def _fmt_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def _format_word(w: Word, gens: GenSet | None) -> str:
    def name(a):
        return gens.names[a] if gens is not None else "x%d" % (a + 1)

    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        k = j - i
        parts.append(name(w[i]) if k == 1 else "%s^%d" % (name(w[i]), k))
        i = j
    return "*".join(parts)


def _as_poly(x) -> NcPoly:
    if isinstance(x, NcPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return NcPoly({(): x})
    raise TypeError("cannot convert %r to NcPoly" % (x,))


class TensorPoly:
    """Finite Q-linear combination of pairs of words (an element of T(V)(x)T(V))."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[Word, Word], object] | None = None):
        t = {}
        if terms:
            for (u, v), c in terms.items():
                c = Fraction(c)
                key = (tuple(u), tuple(v))
                t[key] = t.get(key, 0) + c
        self.terms: Dict[Tuple[Word, Word], Fraction] = _clean(t)

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        return p

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(),
                           key=lambda kv: (word_key(kv[0][0]), word_key(kv[0][1]))))

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return TensorPoly._raw(_clean(t))

    def __neg__(self):
        return TensorPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return TensorPoly._raw({})
        return TensorPoly._raw({k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def contract(self) -> NcPoly:
        """The right action on 1: u(x)v -> v*u."""
        t: Dict[Word, Fraction] = {}
        for (u, v), c in self.terms.items():
            w = v + u
            t[w] = t.get(w, 0) + c
        return NcPoly._raw(_clean(t))

    def format(self, gens: GenSet | None = None) -> str:
        if not self.terms:
            return "0"
        out = ""
        for k, ((u, v), c) in enumerate(self):
            body = "%s(x)%s" % (_format_word(u, gens) or "1", _format_word(v, gens) or "1")
            mag = abs(c)
            if mag != 1:
                body = "%s*%s" % (_fmt_rat(mag), body)
            if k == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += " %s %s" % ("-" if c < 0 else "+", body)
        return out

    def __repr__(self):
        return "TensorPoly(%s)" % self.format()


# -- the derivative operators ----------------------------------------------

def cyclic_sum(p: NcPoly) -> NcPoly:
    """c(p): each word a_1..a_r goes to the sum of its r rotations."""
    t: Dict[Word, Fraction] = {}
    for w, c in p.terms.items():
        if not w:
            # the empty word has no rotations
            continue
        for r in rotations(w):
            t[r] = t.get(r, 0) + c
    return NcPoly._raw(_clean(t))


def cyclic_derivative(p: NcPoly, x: int) -> NcPoly:
    """Sum of v*u over all factorizations p = u x v."""
    t: Dict[Word, Fraction] = {}
    for w, c in p.terms.items():
        for i, a in enumerate(w):
            if a == x:
                r = w[i + 1:] + w[:i]
                t[r] = t.get(r, 0) + c
    return NcPoly._raw(_clean(t))


def partial_derivative(p: NcPoly, x: int) -> TensorPoly:
    """Sum of u (x) v over all factorizations p = u x v."""
    t: Dict[Tuple[Word, Word], Fraction] = {}
    for w, c in p.terms.items():
        for i, a in enumerate(w):
            if a == x:
                k = (w[:i], w[i + 1:])
                t[k] = t.get(k, 0) + c
    return TensorPoly._raw(_clean(t))


def hessian(w: NcPoly, n: int):
    """Matrix H with H[i][j] = (d/dx_i) of the cyclic derivative of w in x_j."""
    cyc = [cyclic_derivative(w, j) for j in range(n)]
    return [[partial_derivative(cyc[j], i) for j in range(n)] for i in range(n)]


def flip(t: TensorPoly) -> TensorPoly:
    return TensorPoly._raw({(v, u): c for (u, v), c in t.terms.items()})


def commutator(a: NcPoly, b: NcPoly) -> NcPoly:
    return a * b - b * a


def relations(w: NcPoly, n: int):
    """The cyclic derivatives r_i of w, one per generator."""
    return [cyclic_derivative(w, i) for i in range(n)]
