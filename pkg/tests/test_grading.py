from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import MANY, potentials
from cypot.catalog import example
from cypot.criterion import relation_space
from cypot.exactla import echelon_basis
from cypot.grading import (GradedQuotient, graded_quotient, hilbert_dims, ideal_component,
                           series_coefficients, target_series)
from cypot.ncpoly import NcPoly, relations

x = NcPoly.gen(0)


def dense_dims(w, n, D):
    """Independent oracle: dim A_d = n^d - rank of all u*r*v, built densely."""
    rels = relations(w, n)
    out = []
    for d in range(D + 1):
        words = list(product(range(n), repeat=d))
        pos = {wd: i for i, wd in enumerate(words)}
        rows = []
        for r in rels:
            for wd, _ in r.terms.items():
                N = len(wd)
                break
            else:
                continue
            if d < N:
                continue
            for i in range(d - N + 1):
                for u in product(range(n), repeat=i):
                    for v in product(range(n), repeat=d - N - i):
                        row = [0] * len(words)
                        for wd, c in r.terms.items():
                            row[pos[u + wd + v]] += c
                        rows.append(row)
        rk = sympy.Matrix(rows).rank() if rows else 0
        out.append(n ** d - rk)
    return out


# -- worked examples ---------------------------------------------------------

def test_ideal_component_examples():
    w, _ = example("antisymmetrizer", 3)
    R = relation_space(w, 3)
    assert ideal_component(R, 2) == R
    R1 = echelon_basis([[1]], 1, ambient_degree=2, n=1)
    assert ideal_component(R1, 3).dim == 1
    assert ideal_component(R, 3).dim == 27 - 10
    assert ideal_component(R, 1).dim == 0


def test_graded_quotient_examples():
    w, _ = example("antisymmetrizer", 3)
    assert graded_quotient(w, 3, 4).dims == [1, 3, 6, 10, 15]
    assert hilbert_dims(x ** 3, 1, 4) == [1, 1, 0, 0, 0]
    w, _ = example("sklyanin", 1, 1, 1)
    assert hilbert_dims(w, 3, 5) == [1, 3, 6, 10, 15, 21]


def test_target_series_examples():
    assert target_series(3, 2, 4).coefficients == (1, 3, 6, 10, 15)
    assert target_series(2, 3, 6).coefficients == (1, 2, 4, 6, 9, 12, 16)
    assert target_series(1, 2, 4).coefficients == (1, 1, 0, 0, 1)
    with pytest.raises(ValueError):
        target_series(2, 1, 3)


def test_target_series_matches_power_series():
    for n, N in [(3, 2), (2, 3), (5, 4), (7, 2)]:
        den = [0] * (N + 2)
        den[0], den[1], den[N], den[N + 1] = 1, -n, n, -1
        assert list(target_series(n, N, 12).coefficients) == series_coefficients(den, 12)


def test_ideal_from_rewrite_matches_direct_span():
    w, _ = example("sklyanin", 1, 2, 3)
    gq = graded_quotient(w, 3, 4)
    R = relation_space(w, 3)
    for d in range(5):
        assert gq.ideal(d) == ideal_component(R, d)


def test_reduction_properties():
    w, _ = example("cubic_typeA", 1, 1, 1)
    gq = graded_quotient(w, 2, 6)
    for d in range(7):
        for k, m in enumerate(gq.normal[d]):
            assert gq.reduce_word(m) == {k: 1}
        for wd in product(range(2), repeat=d):
            red = gq.reduce_word(wd)
            back = gq.to_poly(d, red)
            # reducing the normal form again is a no-op
            assert gq.reduce(back).get(d, {}) == red
            # the word minus its normal form lies in the ideal
            assert gq.ideal(d).contains((NcPoly.word(wd) - back).to_vector(2)) if d else True


def test_multiplication_table_cached():
    w, _ = example("antisymmetrizer", 3)
    gq = graded_quotient(w, 3, 4)
    t = gq.multiplication_table(1, 2)
    assert t is gq.multiplication_table(1, 2)
    assert len(t) == 3 * 6


def test_degree_bound_errors():
    gq = graded_quotient(x ** 3, 1, 3)
    assert gq.dim(-1) == 0
    with pytest.raises(ValueError):
        gq.dim(4)
    with pytest.raises(ValueError):
        gq.reduce_word((0,) * 4)


# -- property suites --------------------------------------------------------------

@MANY
@given(potentials(n_max=3, degrees=(3, 4)))
def test_dims_against_dense_oracle(data):
    n, w = data
    assert hilbert_dims(w, n, 4) == dense_dims(w, n, 4)


@MANY
@given(potentials(n_max=2, degrees=(3, 4)))
def test_dims_equal_complement_of_ideal(data):
    n, w = data
    gq = graded_quotient(w, n, 5)
    R = relation_space(w, n)
    for d in range(6):
        assert gq.dim(d) == n ** d - ideal_component(R, d).dim
