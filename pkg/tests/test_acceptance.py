"""Acceptance criteria 1-8.

Each criterion prints one PASS/FAIL line.  Run directly with
``python tests/test_acceptance.py`` or through pytest.
"""

import os
import random
import sys
import time
from fractions import Fraction

sys.path.insert(0, os.path.dirname(__file__))

from cypot.catalog import example
from cypot.complexes import PotentialComplex, duality_maps, exactness_report
from cypot.criterion import cy3_report
from cypot.exactla import is_invertible
from cypot.grading import graded_quotient, series_coefficients, target_series
from cypot.ncpoly import NcPoly
from cypot.quadric import (identity, matmul, nakayama_check, ore_check, quadric_algebra,
                           sigma_matrix, transpose)

RESULTS = {}


def record(k, ok, detail=""):
    prev = RESULTS.get(k)
    ok = ok and (prev is None or prev[0])
    RESULTS[k] = (ok, detail if not prev or not ok else prev[1])
    line = "CRITERION %d: %s %s" % (k, "PASS" if ok else "FAIL", detail)
    print(line)
    return ok


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_criterion_1_polynomial_algebra():
    w, _ = example("antisymmetrizer", 3)
    rep, dt = timed(lambda: cy3_report(w, 3, 6))
    ok = (rep.hilbert == [1, 3, 6, 10, 15, 21, 28]
          and rep.hilbert == list(target_series(3, 2, 6).coefficients)
          and all(h == 0 for (d, p), h in rep.exactness.homology.items() if d >= 1)
          and str(rep.verdict) == "CONSISTENT_UP_TO(6)" and dt < 10)
    assert record(1, ok, "dims %s, %s, %.2fs" % (rep.hilbert, rep.verdict, dt))


def test_criterion_2_sklyanin():
    w, _ = example("sklyanin", 1, 1, 1)

    def go():
        rep = cy3_report(w, 3, 6)
        gq = graded_quotient(w, 3, 6)
        pc = PotentialComplex(w, 3)
        sq = [duality_maps(w, gq, d, pc).all_commute for d in range(7)]
        return rep, sq
    (rep, sq), dt = timed(go)
    expect = series_coefficients([1, -3, 3, -1], 6)
    ok = rep.hilbert == expect and all(sq) and not rep.verdict.refuted and dt < 30
    assert record(2, ok, "dims %s, squares commute %s, %.2fs" % (rep.hilbert, all(sq), dt))


def test_criterion_3_cubic_typeA():
    w, _ = example("cubic_typeA", 1, 1, 1)
    gq, dt = timed(lambda: graded_quotient(w, 2, 6))
    expect = series_coefficients([1, -2, 0, 2, -1], 6)
    ok = gq.dims == expect == [1, 2, 4, 6, 9, 12, 16] and dt < 10
    assert record(3, ok, "dims %s, %.2fs" % (gq.dims, dt))


def test_criterion_4_negative_fixture():
    w = NcPoly.gen(0) ** 3

    def go():
        rep = cy3_report(w, 1, 5)
        gq = graded_quotient(w, 1, 4)
        ex = exactness_report(w, gq, 4)
        return rep, gq, ex
    (rep, gq, ex), dt = timed(go)
    ok = (rep.verdict.refuted and rep.first_mismatch == 4
          and rep.hilbert[:5] == [1, 1, 0, 0, 0] and rep.target[:5] == [1, 1, 0, 0, 1]
          and ex.first_failure == (4, 3) and dt < 1)
    assert record(4, ok, "%s, exactness failure %s, %.3fs" % (rep.verdict, ex.first_failure, dt))


def test_criterion_4_euler_trap():
    # the trap asks for chi = 0 at degree 4 alongside nonzero homology
    w = NcPoly.gen(0) ** 3
    gq = graded_quotient(w, 1, 4)
    ex = exactness_report(w, gq, 4)
    nonzero = any(ex.homology[(4, p)] for p in range(4))
    chi = ex.euler_characteristic(4, algebra_dim=gq.dim(4))
    ok = nonzero and chi == 0
    assert record(4, ok, "euler trap: homology %s, chi %d"
                  % ([ex.homology[(4, p)] for p in range(4)], chi))


def _random_invertible(rnd, n):
    while True:
        U = [[Fraction(rnd.randint(-6, 6), rnd.randint(1, 4)) if rnd.random() < 0.8 else Fraction(0)
              for _ in range(n)] for _ in range(n)]
        if is_invertible(U):
            return U


def _random_skew(rnd):
    a = Fraction(rnd.randint(1, 9), rnd.randint(1, 4)) * rnd.choice((1, -1))
    return [[Fraction(0), a], [-a, Fraction(0)]]


def test_criterion_6_quadric_suite():
    rnd = random.Random(20240611)
    mats = [_random_invertible(rnd, 2) for _ in range(90)] + [_random_skew(rnd) for _ in range(10)]
    mats += [_random_invertible(rnd, 3) for _ in range(100)]

    def go():
        bad = []
        for U in mats:
            n = len(U)
            S = sigma_matrix(U)
            UT = transpose(U)
            a = all(x + y == 0 for r1, r2 in zip(U, matmul(UT, S)) for x, y in zip(r1, r2))
            b = matmul(matmul(transpose(S), U), S) == U
            skew = all(U[i][j] == -U[j][i] for i in range(n) for j in range(n))
            c = (S == identity(n)) == skew
            d = quadric_algebra(U, 5).hilbert_ok
            nk = nakayama_check(U, 3 if n == 2 else 2)
            e = all(nk.kernel_equals_image.values()) and all(nk.mu_kills_image.values())
            if not (a and b and c and d and e):
                bad.append(U)
        return bad
    bad, dt = timed(go)
    ok = not bad and dt < 60
    assert record(6, ok, "%d matrices, %d failures, %.2fs" % (len(mats), len(bad), dt))


def test_criterion_5_antisymmetrizer_5():
    w, _ = example("antisymmetrizer", 5)
    rep, dt = timed(lambda: cy3_report(w, 5, 5))
    a4 = rep.hilbert[4]
    ok = (rep.hilbert[5] == 3076 == 5 * 620 - 5 * 5 + 1 and a4 == 620
          and str(rep.verdict) == "CONSISTENT_UP_TO(5)" and dt < 60)
    assert record(5, ok, "dim A_5 = %d, %s, %.2fs" % (rep.hilbert[5], rep.verdict, dt))


def test_criterion_7_fano():
    w, spec = example("steiner_fano")
    rep, dt = timed(lambda: ore_check(w, 6, 3))
    ok = (rep.hilbert == [1, 7, 42, 246] and rep.gamma_dims == [1, 6, 35, 204]
          and rep.prefix_sums == rep.hilbert
          and str(rep.criterion.verdict) == "CONSISTENT_UP_TO(3)" and dt < 120)
    assert record(7, ok, "dims %s, gamma %s, %s, %.2fs"
                  % (rep.hilbert, rep.gamma_dims, rep.criterion.verdict, dt))


def test_criterion_8_property_suites():
    import test_complexes as tc
    import test_exactla as te
    import test_ncpoly as tn

    suites = [
        tn.test_euler_relation, tn.test_hessian_flip_symmetry, tn.test_rotation_invariance,
        tn.test_contraction, tc.test_d_squared_zero, tc.test_central_square_always_commutes,
        tc.test_outer_squares_iff_full_rank, tc.test_outer_squares_fail_for_x1_cubed,
        tc.test_shift_duality, te.test_rank_nullity, te.test_intersection_dimension,
    ]
    failed = []
    t = time.perf_counter()
    for s in suites:
        try:
            s()
        except Exception as e:  # report every suite, then fail
            failed.append("%s: %s" % (s.__name__, type(e).__name__))
    dt = time.perf_counter() - t
    ok = not failed
    assert record(8, ok, "%d suites, failed %s, %.1fs" % (len(suites), failed or "none", dt))


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    print()
    for k in sorted(RESULTS):
        print("CRITERION %d: %s" % (k, "PASS" if RESULTS[k][0] else "FAIL"))
