"""The Hilbert-series criterion for a homogeneous potential to be 3-Calabi-Yau.

A report never says "is 3-Calabi-Yau": finite-degree data cannot decide
N-Koszulness, so the positive verdict is CONSISTENT_UP_TO(D).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .complexes import ExactnessReport, PotentialComplex, exactness_report
from .exactla import Subspace, echelon_basis, intersect, tensor_left, tensor_right
from .grading import GradedQuotient, target_series
from .ncpoly import NcPoly, cyclic_sum, relations


class PotentialError(ValueError):
    """Input is not a usable potential (zero, inhomogeneous, or too small)."""


def check_potential(w: NcPoly, n: int) -> int:
    """Validate w and return N (w has degree N+1)."""
    if not w:
        raise PotentialError("potential must be nonzero")
    if not w.is_homogeneous():
        raise PotentialError("potential must be homogeneous, got degrees %s" % w.degrees())
    if w.max_letter() >= n:
        raise PotentialError("potential uses a generator index >= n=%d" % n)
    N = w.degree - 1
    if N < 2:
        raise PotentialError("potential degree must be >= 3 (N >= 2), got %d" % w.degree)
    return N


def relation_space(w: NcPoly, n: int) -> Subspace:
    """R = span of the cyclic derivatives of w, inside V^{(x)N}."""
    N = w.degree - 1
    return echelon_basis([r.to_vector(n) for r in relations(w, n)], n ** N, ambient_degree=N, n=n)


def overlap_space(w: NcPoly, n: int) -> Subspace:
    """R_{N+1} = (R (x) V) n (V (x) R)."""
    R = relation_space(w, n)
    return intersect(tensor_right(R, n), tensor_left(R, n))


@dataclass(frozen=True)
class Verdict:
    kind: str                 # "REFUTED" or "CONSISTENT_UP_TO"
    degree: int
    reason: str = ""

    @property
    def refuted(self) -> bool:
        return self.kind == "REFUTED"

    def __str__(self):
        if self.refuted:
            return "REFUTED(%d, %s)" % (self.degree, self.reason)
        return "CONSISTENT_UP_TO(%d)" % self.degree


@dataclass
class CriterionReport:
    n: int
    N: int
    D: int
    dim_R: int
    dim_R_N1: Optional[int] = None
    c_in_R_N1: Optional[bool] = None
    c_spans_R_N1: Optional[bool] = None
    hilbert: List[int] = field(default_factory=list)
    target: List[int] = field(default_factory=list)
    first_mismatch: Optional[int] = None
    exactness: Optional[ExactnessReport] = None
    checks_run: List[str] = field(default_factory=list)
    verdict: Verdict = Verdict("CONSISTENT_UP_TO", 0)

    def summary(self) -> str:
        lines = [
            "n=%d N=%d D=%d" % (self.n, self.N, self.D),
            "dim R = %d" % self.dim_R,
        ]
        if self.dim_R_N1 is not None:
            lines.append("dim R_{N+1} = %d, c(w) in R_{N+1}: %s" % (self.dim_R_N1, self.c_in_R_N1))
        if self.hilbert:
            lines.append("hilbert %s" % self.hilbert)
            lines.append("target  %s" % self.target)
        if self.exactness is not None:
            lines.append("first exactness failure: %s" % (self.exactness.first_failure,))
        lines.append("verdict: %s" % self.verdict)
        return "\n".join(lines)


def cy3_report(w: NcPoly, n: int, D: int | None = None, *, gq: GradedQuotient | None = None,
               exactness: bool = True, short_circuit: bool = True) -> CriterionReport:
    """Run the rank, overlap, Hilbert and exactness checks in that order.

    With ``short_circuit`` the first refuting check ends the run; the
    ``checks_run`` list records how far it got.
    """
    N = check_potential(w, n)
    if D is None:
        D = 2 * (N + 1) + 2
    R = relation_space(w, n)
    rep = CriterionReport(n=n, N=N, D=D, dim_R=R.dim)
    failures = []

    def fail(degree, reason):
        failures.append(Verdict("REFUTED", degree, reason))
        return short_circuit

    rep.checks_run.append("rank")
    if R.dim < n and fail(N, "dependent cyclic derivatives"):
        rep.verdict = failures[0]
        return rep

    rep.checks_run.append("overlap")
    if N + 1 <= D:
        ov = intersect(tensor_right(R, n), tensor_left(R, n))
        c = cyclic_sum(w).to_vector(n)
        rep.dim_R_N1 = ov.dim
        rep.c_in_R_N1 = ov.contains(c)
        rep.c_spans_R_N1 = rep.c_in_R_N1 and ov.dim == 1
        if not rep.c_in_R_N1:
            # cannot happen for a nonzero potential; kept as an audit
            raise AssertionError("c(w) outside R_{N+1}")
        if ov.dim != 1 and fail(N + 1, "dim R_{N+1} = %d, not spanned by c(w)" % ov.dim):
            rep.verdict = failures[0]
            return rep

    rep.checks_run.append("hilbert")
    if gq is None or gq.D < D:
        gq = GradedQuotient.from_potential(w, n, D)
    rep.hilbert = gq.dims[:D + 1]
    rep.target = list(target_series(n, N, D).coefficients)
    for d, (a, b) in enumerate(zip(rep.hilbert, rep.target)):
        if a != b:
            rep.first_mismatch = d
            break
    if rep.first_mismatch is not None and fail(
            rep.first_mismatch, "hilbert mismatch: dim A_%d = %d, series gives %d"
            % (rep.first_mismatch, rep.hilbert[rep.first_mismatch], rep.target[rep.first_mismatch])):
        rep.verdict = failures[0]
        return rep

    if exactness:
        rep.checks_run.append("exactness")
        pc = PotentialComplex(w, n)
        rep.exactness = exactness_report(w, gq, D, pc)
        ff = rep.exactness.first_failure
        if ff is not None:
            fail(ff[0], "C_w not exact at degree %d, position %d" % ff)

    if failures:
        rep.verdict = min(failures, key=lambda v: v.degree)
    else:
        rep.verdict = Verdict("CONSISTENT_UP_TO", D)
    return rep
