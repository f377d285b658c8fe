from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from conftest import MANY, homogeneous
from cypot.ncpoly import (GenSet, NcPoly, TensorPoly, commutator, cyclic_derivative, cyclic_sum,
                          flip, hessian, index_word, partial_derivative, rotations, word_index,
                          word_key)

x, y, z = (NcPoly.gen(i) for i in range(3))
X, Y, Z = 0, 1, 2


def W(*letters):
    return NcPoly.word(letters)


def T(u, v, c=1):
    return TensorPoly({(tuple(u), tuple(v)): c})


# -- worked examples ---------------------------------------------------------

def test_cyclic_sum_examples():
    assert cyclic_sum(x * y) == x * y + y * x
    assert cyclic_sum(x * x) == 2 * x * x
    assert cyclic_sum(x * y * z) == x * y * z + y * z * x + z * x * y


def test_cyclic_derivative_examples():
    assert cyclic_derivative(x * y * z, X) == y * z
    assert cyclic_derivative(x ** 3, X) == 3 * x * x
    # x_1 = 0, x_2 = 1, z = 2: u = x_2, v = z gives z x_2
    assert cyclic_derivative(W(1, 0, 2), 0) == W(2, 1)


def test_partial_derivative_examples():
    assert partial_derivative(x * y * x, X) == T((), (Y, X)) + T((X, Y), ())
    assert not partial_derivative(y * z, X)
    assert partial_derivative(z * x, X) == T((Z,), ())


def test_hessian_examples():
    H = hessian(x * y * z, 3)
    assert H[X][Y] == T((Z,), ())
    assert H[Y][X] == T((), (Z,))


def test_hessian_of_uz():
    # entry (i, j) = u_ji 1(x)z + u_ij z(x)1
    U = [[Fraction(2), Fraction(-3)], [Fraction(5), Fraction(7)]]
    u = NcPoly({(i, j): U[i][j] for i in range(2) for j in range(2)})
    w = u * NcPoly.gen(2)
    H = hessian(w, 3)
    for i in range(2):
        for j in range(2):
            assert H[i][j] == T((), (2,), U[j][i]) + T((2,), (), U[i][j])


def test_flip_examples():
    assert flip(T((Z,), ())) == T((), (Z,))
    assert flip(T((), (Y, X)) + T((X, Y), ())) == T((Y, X), ()) + T((), (X, Y))
    assert flip(TensorPoly()) == TensorPoly()


def test_commutator_examples():
    assert commutator(x, y) == x * y - y * x
    assert not commutator(x, x)
    assert commutator(x * y, z) == x * y * z - z * x * y


# -- basic structure ----------------------------------------------------------

def test_zero_terms_dropped():
    p = NcPoly({(0,): 1, (1,): 0})
    assert p.terms == {(0,): 1}
    assert not (x - x).terms


def test_word_order_and_coordinates():
    words = sorted([(1,), (0, 1), (0,), (), (0, 0)], key=word_key)
    assert words == [(), (0,), (1,), (0, 0), (0, 1)]
    for i in range(27):
        assert word_index(index_word(i, 3, 3), 3) == i


def test_genset():
    g = GenSet(["a", "b"])
    assert g.n == 2 and g.index("b") == 1
    try:
        GenSet(["a", "a"])
    except ValueError:
        pass
    else:
        raise AssertionError("duplicate names accepted")


def test_vector_round_trip():
    p = 3 * x * y - Fraction(1, 2) * z * z
    assert NcPoly.from_vector(p.to_vector(3), 3, 2) == p


# -- property suites --------------------------------------------------------------

@MANY
@given(homogeneous())
def test_euler_relation(data):
    n, w = data
    left = sum((cyclic_derivative(w, i) * NcPoly.gen(i) for i in range(n)), NcPoly.zero())
    right = sum((NcPoly.gen(i) * cyclic_derivative(w, i) for i in range(n)), NcPoly.zero())
    assert left == cyclic_sum(w)
    assert right == cyclic_sum(w)


@MANY
@given(homogeneous(min_degree=2))
def test_hessian_flip_symmetry(data):
    n, w = data
    H = hessian(w, n)
    for i in range(n):
        for j in range(n):
            assert flip(H[i][j]) == H[j][i]


@MANY
@given(homogeneous(), st.integers(0, 3))
def test_rotation_invariance(data, shift):
    n, p = data
    rot = p.map_words(lambda w: w[shift % len(w):] + w[:shift % len(w)])
    for i in range(n):
        assert cyclic_derivative(rot, i) == cyclic_derivative(p, i)
    assert cyclic_sum(rot) == cyclic_sum(p)


@MANY
@given(homogeneous())
def test_contraction(data):
    n, p = data
    for i in range(n):
        assert partial_derivative(p, i).contract() == cyclic_derivative(p, i)


@MANY
@given(homogeneous())
def test_degree_bookkeeping(data):
    n, p = data
    d = p.degree
    c = cyclic_sum(p)
    assert not c or set(c.degrees()) == {d}
    for i in range(n):
        q = cyclic_derivative(p, i)
        assert not q or set(q.degrees()) == {d - 1}
        for (u, v), _ in partial_derivative(p, i):
            assert len(u) + len(v) == d - 1


@MANY
@given(homogeneous(), homogeneous())
def test_flip_involution_and_commutator_antisymmetry(a, b):
    _, p = a
    _, q = b
    t = partial_derivative(p, 0)
    assert flip(flip(t)) == t
    assert commutator(p, q) == -commutator(q, p)


def test_rotations_helper():
    assert list(rotations((0, 1, 2))) == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
